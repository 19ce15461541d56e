import os
import sys

build_py = os.environ.get("COCLASS_PYTHONPATH")
if build_py and build_py not in sys.path:
    sys.path.insert(0, build_py)
