from __future__ import absolute_import, print_function

from fractions import Fraction

from .exact import ExactMatrix, format_scalar


def format_value(value):
    """Exact rationals as 'num/den', matrices as nested lists of those."""
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, ExactMatrix):
        return [[format_scalar(x) for x in row] for row in value.to_lists()]
    return value


def print_dict(d):
    for key in [key for key in d if not isinstance(d[key], ExactMatrix)]:
        print("%s: %s" % (key, format_value(d[key])))
    for key in [key for key in d if isinstance(d[key], ExactMatrix)]:
        print("%s: %s rank=%s" % (key, d[key].shape, d[key].rank()))
        for row in format_value(d[key]):
            print("    %s" % " ".join(row))
