import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("HYPOTHESIS_EXAMPLES", "150")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

nonzero = st.integers(-6, 6).filter(bool)
paths = st.lists(nonzero, min_size=1, max_size=3).map(tuple)
seeds = st.integers(0, 2**32)
