import os

import ninfty

DATA_DIR = os.path.join(os.path.dirname(ninfty.__file__), "data")


def data_file(name):
    return os.path.join(DATA_DIR, name + ".json")
