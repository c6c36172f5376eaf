"""scikit-learn compatible transformers over the abjad functions.

All three transformers are stateless: ``fit`` only validates its input and
records ``n_features_in_``.  They take a single column (1-D array-like or an
``(n, 1)`` array) and return an ``(n, 1)`` array, so they slot into
``Pipeline`` and ``ColumnTransformer``.

>>> AbjadEncoder(script="arabic").fit_transform([1245, 7]).ravel().tolist()
['همرغ', 'ز']
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import decode_number, encode_number, guematria
from .glyphs import NumeralSystem, transliterate
from .tables import Script


def check_column(X, *, kind: str) -> np.ndarray:
    """Validate a single-column input and return it as a 1-D object array.

    ``kind`` is ``"int"`` or ``"str"`` and sets the accepted element type.
    """
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"expected a single column, got shape {arr.shape}")
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected a 1-D array or a single column, got {arr.ndim} dimensions")
    if kind == "int":
        out = np.empty(arr.shape[0], dtype=object)
        for i, v in enumerate(arr):
            if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
                if isinstance(v, (float, np.floating)) and float(v).is_integer():
                    v = int(v)
                else:
                    raise ValueError(f"element {i} is not an integer: {v!r}")
            out[i] = int(v)
        return out
    for i, v in enumerate(arr):
        if not isinstance(v, str):
            raise ValueError(f"element {i} is not a string: {v!r}")
    return arr


def _column(values, dtype) -> np.ndarray:
    return np.asarray(list(values), dtype=dtype).reshape(-1, 1)


class _StatelessColumnTransformer(TransformerMixin, BaseEstimator):
    _input_kind = "str"

    def _check_params(self) -> None:
        pass

    def fit(self, X, y=None):
        self._check_params()
        check_column(X, kind=self._input_kind)
        self.n_features_in_ = 1
        return self

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "n_features_in_")
        name = input_features[0] if input_features is not None else "x0"
        return np.asarray([f"{type(self).__name__.lower()}__{name}"], dtype=object)

    def __sklearn_tags__(self):
        tags = super().__sklearn_tags__()
        tags.requires_fit = True
        tags.input_tags.string = self._input_kind == "str"
        tags.input_tags.two_d_array = True
        return tags


class AbjadEncoder(_StatelessColumnTransformer):
    """Integers to letter numerals; ``inverse_transform`` decodes them back."""

    _input_kind = "int"

    def __init__(self, script="arabic", strict=False):
        self.script = script
        self.strict = strict

    def _check_params(self) -> None:
        Script(self.script)

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        return _column((encode_number(n, self.script) for n in check_column(X, kind="int")), object)

    def inverse_transform(self, X):
        check_is_fitted(self, "n_features_in_")
        words = check_column(X, kind="str")
        return _column((decode_number(w, self.script, self.strict) for w in words), np.int64)


class GuematriaTransformer(_StatelessColumnTransformer):
    """Texts to the sum of their letter values."""

    def __init__(self, script="arabic", mode="lenient", taa_marbuta="ha"):
        self.script = script
        self.mode = mode
        self.taa_marbuta = taa_marbuta

    def _check_params(self) -> None:
        Script(self.script)
        if self.mode not in ("lenient", "strict"):
            raise ValueError(f"mode must be 'lenient' or 'strict', got {self.mode!r}")
        if self.taa_marbuta not in ("ha", "ta"):
            raise ValueError(f"taa_marbuta must be 'ha' or 'ta', got {self.taa_marbuta!r}")

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        texts = check_column(X, kind="str")
        return _column(
            (guematria(t, self.script, self.mode, taa_marbuta=self.taa_marbuta) for t in texts),
            np.int64,
        )


class DigitTransliterator(_StatelessColumnTransformer):
    def __init__(self, source="eastern", target="western"):
        self.source = source
        self.target = target

    def _check_params(self) -> None:
        NumeralSystem(self.source)
        NumeralSystem(self.target)

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        texts = check_column(X, kind="str")
        return _column((transliterate(t, self.source, self.target) for t in texts), object)

    def inverse_transform(self, X):
        check_is_fitted(self, "n_features_in_")
        texts = check_column(X, kind="str")
        return _column((transliterate(t, self.target, self.source) for t in texts), object)
