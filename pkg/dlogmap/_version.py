# file generated by setuptools_scm
# do not edit

__version__ = "0.1.0"
__version_tuple__ = (0, 1, 0)
