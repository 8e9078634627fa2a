"""Kernels densos (polar, raízes PSD/PD, raiz unitária, Schur antissimétrica)."""
