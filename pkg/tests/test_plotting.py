from hyperanimals import new_context
from hyperanimals.plotting import plot_epsilon, plot_pmin, write_report_figures

PNG = b"\x89PNG"


def test_pmin_figure(tmp_path):
    out = plot_pmin(new_context(4, 5), 1, 200, tmp_path / "p.png")
    assert out.read_bytes()[:4] == PNG


def test_euclidean_pmin_figure(tmp_path):
    out = plot_pmin(new_context(4, 4), 1, 50, tmp_path / "sub" / "p.png")
    assert out.exists()


def test_epsilon_figure(tmp_path):
    out = plot_epsilon(new_context(7, 3), 500, tmp_path / "e.png")
    assert out.read_bytes()[:4] == PNG


def test_report_figures(tmp_path):
    paths = write_report_figures(new_context(3, 7), 300, tmp_path)
    assert sorted(p.name for p in paths) == ["epsilon_3_7.png", "pmin_3_7.png"]
