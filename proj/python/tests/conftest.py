import os
import sys

# ctest points this at the freshly built package; it must win over any
# installed or editable copy.
_build = os.environ.get("VRPH_PYTHON_BUILD_DIR")
if _build:
    sys.meta_path[:] = [f for f in sys.meta_path if type(f).__name__ != "ScikitBuildRedirectingFinder"]
    sys.path.insert(0, _build)
    for name in [m for m in sys.modules if m == "vrph" or m.startswith("vrph.")]:
        del sys.modules[name]
