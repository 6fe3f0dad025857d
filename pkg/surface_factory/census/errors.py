from surface_factory.utils.errors import SurfaceFactoryError


class CensusTooLarge(SurfaceFactoryError):
    pass


class InvalidCensusQuery(SurfaceFactoryError):
    pass
