from surface_factory.utils.typing import Config


class Configurable:
    def __init__(self, cfg: Config):
        self.cfg: Config = cfg
