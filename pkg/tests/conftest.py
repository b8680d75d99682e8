import hypothesis.strategies as st
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

# Bounded complex numbers; keeps every hypothesis example well inside the
# range where double precision arithmetic behaves.
unit_floats = st.floats(-1.0, 1.0, allow_nan=False, allow_infinity=False)
complexes = st.builds(complex, unit_floats, unit_floats)
