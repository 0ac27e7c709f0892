"""JSON encoding of reports with a fixed number of significant digits
"""

import math
from json import JSONEncoder
from json.encoder import encode_basestring, encode_basestring_ascii

import numpy as np

SIGNIFICANT_DIGITS = 12


def format_float(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    """Shortest form of ``value`` with ``digits`` significant digits."""
    if value != value:
        return 'NaN'
    if math.isinf(value):
        return 'Infinity' if value > 0 else '-Infinity'
    text = format(value, '.{0}g'.format(digits))
    return '0' if text == '-0' else text


class ReportJSONEncoder(JSONEncoder):
    """JSON encoder for :py:class:`~hilbertmetric.report.MetricReport` documents.

    Differences from :py:class:`json.JSONEncoder`:

    +--------------------------+----------------------------------------+
    | Python                   | JSON                                   |
    +==========================+========================================+
    | float, numpy floating    | number with 12 significant digits      |
    +--------------------------+----------------------------------------+
    | NaN, +-Infinity          | string ``"NaN"``, ``"Infinity"``, ...  |
    +--------------------------+----------------------------------------+
    | numpy integer, bool      | number, true/false                     |
    +--------------------------+----------------------------------------+
    | numpy array              | (nested) array                         |
    +--------------------------+----------------------------------------+

    Output is byte-stable: the same document always encodes to the same
    text, so two runs with the same seed can be compared with ``cmp``.
    """

    digits = SIGNIFICANT_DIGITS

    def default(self, o):
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if hasattr(o, 'to_dict'):
            return o.to_dict()
        return JSONEncoder.default(self, o)

    def iterencode(self, o, _one_shot=False):
        if self.ensure_ascii:
            _encoder = encode_basestring_ascii
        else:
            _encoder = encode_basestring

        digits = self.digits

        def floatstr(value):
            text = format_float(value, digits)
            if text in ('NaN', 'Infinity', '-Infinity'):
                return _encoder(text)
            return text

        if self.indent is None or isinstance(self.indent, str):
            indent = self.indent
        else:
            indent = ' ' * self.indent
        return _make_iterencode(self.default, _encoder, indent, floatstr,
                                self.key_separator, self.item_separator, self.sort_keys)(o, 0)


def _make_iterencode(_default, _encoder, _indent, _floatstr, _key_separator, _item_separator, _sort_keys):

    def _scalar(value):
        if isinstance(value, str):
            return _encoder(value)
        if value is None:
            return 'null'
        if value is True or isinstance(value, np.bool_) and value:
            return 'true'
        if value is False or isinstance(value, np.bool_):
            return 'false'
        if isinstance(value, (int, np.integer)):
            return int.__repr__(int(value))
        if isinstance(value, (float, np.floating)):
            return _floatstr(float(value))
        return None

    def _newline(level):
        return '' if _indent is None else '\n' + _indent * level

    def _iterencode_list(lst, level):
        if not len(lst):
            yield '[]'
            return
        yield '['
        for i, value in enumerate(lst):
            yield (_item_separator if i else '') + _newline(level + 1)
            yield from _iterencode(value, level + 1)
        yield _newline(level) + ']'

    def _iterencode_dict(dct, level):
        if not dct:
            yield '{}'
            return
        yield '{'
        items = sorted(dct.items()) if _sort_keys else dct.items()
        for i, (key, value) in enumerate(items):
            if not isinstance(key, str):
                key = _scalar(key) if not isinstance(key, (float, np.floating)) else format_float(float(key))
            yield (_item_separator if i else '') + _newline(level + 1)
            yield _encoder(key) + _key_separator
            yield from _iterencode(value, level + 1)
        yield _newline(level) + '}'

    def _iterencode(o, level):
        text = _scalar(o)
        if text is not None:
            yield text
        elif isinstance(o, (list, tuple)):
            yield from _iterencode_list(o, level)
        elif isinstance(o, dict):
            yield from _iterencode_dict(o, level)
        else:
            yield from _iterencode(_default(o), level)

    return _iterencode
