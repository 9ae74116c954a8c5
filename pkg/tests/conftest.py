import os

# Deterministic threading for the numba kernels; TBB on this image is too
# old and only warns, so pin the portable layer before numba loads.
os.environ.setdefault("NUMBA_THREADING_LAYER", "workqueue")
