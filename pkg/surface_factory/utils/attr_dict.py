class AttrDict(dict):
    """Dictionary with attribute access, used for configs that did not come from argparse."""

    __setattr__ = dict.__setitem__
    __delattr__ = dict.__delitem__

    def __getattribute__(self, item):
        if item in self:
            return self[item]
        else:
            return super().__getattribute__(item)

    def copy(self) -> "AttrDict":
        return AttrDict(super().copy())
