from surface_factory.utils.errors import SurfaceFactoryError


class ParameterOutOfRange(SurfaceFactoryError):
    pass


class PreconditionViolated(SurfaceFactoryError):
    pass


class NoClosingMap(SurfaceFactoryError):
    """No boundary identification of the pieces gives a valid closed one-vertex triangulation."""


class UnknownFamily(SurfaceFactoryError):
    pass
