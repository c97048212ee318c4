"""DFT operator family: exact cyclotomic and floating point verification."""

import json

import numpy as np

from ._dftalg import (
    DftalgError,
    exact_rank,
    field_order_for,
    intertwiner_space_dimension,
    operator_ids,
    relation_groups,
)
from . import _dftalg

__all__ = [
    "DftalgError",
    "exact_rank",
    "field_order_for",
    "intertwiner_space_dimension",
    "operator_ids",
    "relation_groups",
    "operator",
    "operator_exact",
    "verify",
    "spectrum",
]


def operator(n, operator_id):
    """Float matrix of an operator as a complex numpy array."""
    return np.array(_dftalg.operator_matrix(n, operator_id), dtype=complex)


def operator_exact(n, operator_id):
    """Exact matrix in dump form: entries hold {order, coeffs} with rational strings."""
    return json.loads(_dftalg.operator_matrix_exact_json(n, operator_id))


def verify(n_values, relations=("all",), backend="both", seed=1):
    if isinstance(n_values, int):
        n_values = [n_values]
    if isinstance(relations, str):
        relations = [relations]
    return json.loads(_dftalg.verify_json(list(n_values), list(relations), backend, seed))


def spectrum(n, operator_id):
    return json.loads(_dftalg.spectrum_json(n, operator_id))
