import pytest

from reesdual import IdealGens, Poly, ideal_instance_from_strings


@pytest.fixture(scope="session")
def example_instance():
    """The running worked example: d=2, f=x1^3, circulant linear
    presentation on three variables."""
    return ideal_instance_from_strings(
        2, 3, "x1^3", [["x1", "x3"], ["x2", "x1"], ["x3", "x2"]]
    )


@pytest.fixture(scope="session")
def example_xs(example_instance):
    vars = example_instance.vars
    return IdealGens(
        vars, [Poly.var(vars, i) for i in vars.x_indices()]
    )
