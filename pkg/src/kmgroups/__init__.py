"""Exact computational group theory for groups generated by 4-subset labels."""
from .words import Word, format_word, parse_word
from .lattice import AbelianInvariants, SparseIntMatrix, h1, smith_normal_form
from .presentation import Presentation, tietze_simplify
from .groups import build, build_delta, build_gamma, build_gamma_hat, canonical_quad, lambda_generators
from .homs import make_hom
from .rewrite import rewrite_in_lambda, verify_certificate
from .schreier import coset_table, h1_kernel, rs_presentation, schreier_transversal

__version__ = "0.1.0"
