"""Relation catalog, triple relations, rewriting and the distinguished-monomial table."""

from .catalog import (
    CurveIdentity,
    Relation,
    RelationCatalog,
    VerifyReport,
    build_catalog,
    curve_identities,
    verify,
    verify_identity,
    verify_printed,
)
from .rewrite import NormalFormResult, RewriteError, RewriteSystem, StepFailure, normal_form
from .table import CORRECTED_TABLE, TABLE, RowReport, TableRow, check_table_row, exact_rank, xi_member
from .triples import AnsatzFailure, cubic_relation, derive_triple_relations

__all__ = [
    "AnsatzFailure",
    "CORRECTED_TABLE",
    "CurveIdentity",
    "NormalFormResult",
    "Relation",
    "RelationCatalog",
    "RewriteError",
    "RewriteSystem",
    "RowReport",
    "StepFailure",
    "TABLE",
    "TableRow",
    "VerifyReport",
    "build_catalog",
    "check_table_row",
    "cubic_relation",
    "curve_identities",
    "derive_triple_relations",
    "exact_rank",
    "normal_form",
    "verify",
    "verify_identity",
    "verify_printed",
    "xi_member",
]
