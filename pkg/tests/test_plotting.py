from signedperm.core import Family
from signedperm.plotting import plot_descent_vector, plot_triangle
from signedperm.statistics import Order, descent_vector, two_sided_triangle


def test_plots_write_files(tmp_path):
    tri = tmp_path / "t.png"
    vec = tmp_path / "v.svg"
    plot_triangle(two_sided_triangle(3, Order.R), str(tri))
    plot_descent_vector(descent_vector(4, Family.FPF_INVOLUTIONS, Order.NATURAL), str(vec))
    assert tri.stat().st_size > 0
    assert b"<svg" in vec.read_bytes()
