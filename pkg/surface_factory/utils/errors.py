class SurfaceFactoryError(Exception):
    """Base class for domain errors. The command line maps these to exit status 1."""
