"""Kernels loaded by custom graphon manifests in tests."""


def product_kernel(x, y):
    """W(x, y) = 1 - 0.5 x y."""
    return 1.0 - 0.5 * x * y
