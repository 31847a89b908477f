import numpy as np
from hypothesis import strategies as st

from vernamsim import StateVector

bitstrings = st.integers(1, 6).flatmap(lambda n: st.text("01", min_size=n, max_size=n))


@st.composite
def states(draw, max_qubits=5):
    n = draw(st.integers(1, max_qubits))
    floats = st.floats(-1, 1, allow_nan=False, allow_infinity=False)
    re = np.array(draw(st.lists(floats, min_size=2 ** n, max_size=2 ** n)))
    im = np.array(draw(st.lists(floats, min_size=2 ** n, max_size=2 ** n)))
    amps = re + 1j * im
    norm = np.linalg.norm(amps)
    if norm < 1e-3:
        amps = np.zeros(2 ** n, dtype=complex)
        amps[0] = 1
        norm = 1.0
    return StateVector(n, amps / norm)
