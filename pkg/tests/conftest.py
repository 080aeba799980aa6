import numpy as np
import pytest

import hyperalpha as ha
from hyperalpha import kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger kernel compilation once so timed tests measure the algorithms."""
    H = ha.build(4, [[1, 2, 3], [2, 3, 4]])
    x = np.array([0.5, 0.4, 0.3, 0.2])
    ha.laplacian_form(H, x)
    ha.laplacian_gradient(H, x)
    ha.laplacian_form_batch(H, np.vstack([x, x]))
    ha.dense_contraction_oracle(H, x)
    ha.analytic_connectivity(H, ha.SolverConfig(restarts=2, max_iterations=50))
    ha.isoperimetric_number(H)
    ha.lambda2(ha.clique_expansion(H))
    kernels.active()
