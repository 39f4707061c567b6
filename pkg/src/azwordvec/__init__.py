__project__ = "azwordvec"
__version__ = "2024.1.0"
