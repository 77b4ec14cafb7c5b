"""Link invariants of isolated hypersurface singularities from integer
Seifert matrices: Alexander polynomials, Levine-Tristram signatures and
nullities, hermitian variation structures, mod-2 spectra, and mechanical
verification of spectral semicontinuity inequalities."""

from .catalog import (AdjacencyExample, BrieskornExponents, a_singularity,
                      adjacency_examples, brieskorn, brieskorn_spectrum_oracle,
                      by_name, d4_singularity, one_var_seifert, thom_sebastiani)
from .hvs import (HVS, ISp, ISpEntry, IntervalCount, JordanBlock, JordanData,
                  PBlock, QBlock, SignBlock, SpectralValue, Spectrum,
                  extract_spectrum, hvs_from_seifert, interval_count,
                  jordan_data, mod2_reduce, semisimple_signs,
                  spectrum_from_decomposition)
from .linalg import Inertia, hermitian_inertia
from .roots import RootAngle, unit_circle_roots
from .seifert import (KeefDecomposition, SeifertMatrix, alexander,
                      intersection_form, keef_reduce, monodromy, n0, pencil)
from .semicontinuity import (AlphaRecord, BoundRecord, CobordismBettiData,
                             DeformationInstance, SemicontinuityReport,
                             admissible_alphas, check_infinity, check_local,
                             check_local_to_global, local_global_bound,
                             mk_bound, mk_bound_strict)
from .signatures import (CirclePoint, JumpValue, ProfileInterval,
                         SignatureProfile, circle_roots, hermitian_pencil,
                         lt_nullity, lt_signature, signature_profile)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
