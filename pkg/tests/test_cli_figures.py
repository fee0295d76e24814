import io
import math

import pytest

from fodkit.cli import main
from fodkit.csvio import CsvRecord, format_float, read_records, write_records
from fodkit.expr import derivative, evaluate, parse
from fodkit.figures import FIGURES, figure_records, write_figure, write_gnuplot_script

G13 = math.gamma(1 / 3)


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def by_series(records):
    out = {}
    for r in records:
        out.setdefault(r.series, []).append(r)
    return out


class TestCsv:
    def test_format(self):
        assert format_float(0.1) == "0.10000000000000001"
        assert float(format_float(1 / 3)) == 1 / 3

    def test_round_trip(self):
        records = [CsvRecord(1.5, "s", -2.0, 0.25, "complex"), CsvRecord(2.0, "s", math.nan, math.nan, "pole")]
        buf = io.StringIO(newline="")
        write_records(buf, records)
        text = buf.getvalue()
        assert text.splitlines()[0] == "x,series,re,im,classification"
        assert "\r" not in text
        back = read_records(io.StringIO(text))
        assert back[0] == records[0]
        assert math.isnan(back[1].re) and back[1].classification == "pole"

    def test_header_without_classification(self):
        buf = io.StringIO(newline="")
        write_records(buf, [CsvRecord(1.0, "s", 2.0)])
        assert buf.getvalue() == "x,series,re,im\n1,s,2,0\n"


class TestEval:
    def test_identity(self):
        assert run(["eval", "--expr", "x", "--method", "karci", "--alpha", "2/3", "--x", "7"]) == (
            0,
            "1.00000000000 + 0i (real)\n",
        )

    def test_caputo_constant(self):
        code, text = run(["eval", "--expr", "5", "--method", "caputo", "--alpha", "2/3", "--x", "1.5", "--a", "0.5"])
        assert code == 0 and text.startswith("0.0000")

    def test_euler_monomial(self):
        code, text = run(["eval", "--expr", "x^3", "--method", "euler", "--alpha", "1", "--x", "2"])
        assert code == 0 and text.startswith("12.0000000000")

    def test_euler_needs_monomial(self):
        assert run(["eval", "--expr", "sin(x)", "--method", "euler", "--alpha", "1/2", "--x", "2"])[0] == 3

    def test_complex(self):
        code, text = run(["eval", "--expr", "sin(x)", "--alpha", "1/2", "--x", "4"])
        assert code == 0 and text.rstrip().endswith("(complex)")

    def test_parse_error(self):
        assert run(["eval", "--expr", "x+*", "--alpha", "1/2", "--x", "1"])[0] == 2

    def test_bad_order(self):
        assert run(["eval", "--expr", "x", "--alpha", "1/0", "--x", "1"])[0] == 2

    def test_pole(self):
        assert run(["eval", "--expr", "ln(x)", "--alpha", "1/2", "--x", "1"])[0] == 3

    def test_domain(self):
        assert run(["eval", "--expr", "x^2", "--alpha", "1/2", "--x", "0"])[0] == 3

    def test_non_convergence(self):
        argv = ["eval", "--expr", "x^2", "--method", "karci-oracle", "--alpha", "1/2", "--x", "2",
                "--levels", "2", "--tol", "1e-16"]
        assert run(argv)[0] == 4

    def test_usage_error(self):
        with pytest.raises(SystemExit) as info:
            main(["eval", "--expr", "x"])
        assert info.value.code == 2


class TestGridAndOracle:
    def test_grid(self, tmp_path):
        path = tmp_path / "g.csv"
        argv = ["grid", "--expr", "sin(x)", "--alpha", "1/2", "--min", "0.1", "--max", "10", "--count", "20",
                "--out", str(path)]
        assert run(argv)[0] == 0
        with open(path, newline="") as fh:
            records = read_records(fh)
        assert len(records) == 20
        assert {r.classification for r in records} == {"real", "complex"}

    def test_grid_marks_poles(self):
        code, text = run(["grid", "--expr", "ln(x)", "--alpha", "1/2", "--min", "0.5", "--max", "1.5", "--count", "3"])
        records = read_records(io.StringIO(text))
        assert code == 0 and records[1].classification == "pole"

    def test_oracle(self):
        code, text = run(["oracle", "--expr", "x^2+3*x+4", "--alpha", "1/2", "--x", "2"])
        lines = text.splitlines()
        assert code == 0 and len(lines) == 3
        assert float(lines[2].split()[-1]) <= 1e-6


class TestCompare:
    def _series(self, argv):
        code, text = run(argv)
        assert code == 0
        return by_series(read_records(io.StringIO(text)))

    def test_constant(self):
        s = self._series(["compare", "--expr", "5", "--alpha", "2/3", "--min", "1", "--max", "3", "--count", "5",
                          "--a", "0.5"])
        assert set(s) == {"karci", "karci-oracle", "euler", "rl", "caputo"}
        assert all(r.re == 0.0 for r in s["karci"])
        assert all(r.re != 0.0 for r in s["euler"] + s["rl"])
        assert all(abs(r.re) <= 1e-12 for r in s["caputo"])

    def test_identity(self):
        s = self._series(["compare", "--expr", "x", "--alpha", "2/3", "--min", "1", "--max", "3", "--count", "5",
                          "--a", "0.5"])
        assert all(r.re == 1.0 for r in s["karci"])
        for name in ("euler", "rl", "caputo"):
            assert all(abs(r.re - 1.0) > 1e-3 for r in s[name])

    def test_identity_order_one(self):
        s = self._series(["compare", "--expr", "x", "--alpha", "1", "--min", "1", "--max", "3", "--count", "5"])
        for name, records in s.items():
            assert all(r.re == pytest.approx(1.0, abs=1e-9) for r in records), name
        for name in ("karci", "euler", "rl", "caputo"):
            assert all(r.re == 1.0 for r in s[name])


class TestFigures:
    def test_figure_1_table_expression(self):
        s = by_series(figure_records(1))
        assert set(s) == {"c=5", "c=10", "c=-5", "c=-10"}
        for c in (5, 10, -5, -10):
            rows = s[f"c={c}"]
            assert [r.x for r in rows] == list(range(1, 101))
            for r in rows:
                expected = c * (1 / G13 * (r.x ** (-2 / 3)))
                assert r.re == pytest.approx(expected, rel=1e-12, abs=1e-300)
        assert s["c=5"][0].re == pytest.approx(1.8664108695369750, rel=1e-13)

    def test_figure_2_sign(self):
        s = by_series(figure_records(2))
        row = s["c=5"][1]  # i = 2, a = 0.5
        assert row.re == pytest.approx(5 * 1.5 ** (-2 / 3) / G13, rel=1e-12)
        code = s["c=5/code"][1]
        assert code.re == pytest.approx(-row.re, rel=1e-12)
        # i = 1 has i - a = 0.5 > 0, so every code row is real
        assert all(r.im == 0.0 for r in s["c=5/code"])

    def test_figure_3(self):
        a = 2.5
        s = by_series(figure_records(3))
        for r in s["euler"]:
            assert r.re == pytest.approx(1 / math.gamma(4 / 3) * r.x ** (1 / 3), rel=1e-12)
        assert [r.x for r in s["rl"]] == list(range(3, 101))
        for r in s["rl"]:
            d = r.x - a
            assert r.re == pytest.approx((2 * d ** (1 / 3) + r.x * d ** (-2 / 3)) / G13, rel=1e-12)
        for r in s["caputo"]:
            assert r.re == pytest.approx(3 * (r.x - a) ** (1 / 3) / G13, rel=1e-12)
        for r in s["caputo/code"]:
            z = (1 / G13) * (3 * complex(r.x - a) ** (1 / 3))
            assert complex(r.re, r.im) == pytest.approx(z, rel=1e-12)
        for r in s["rl/code"]:
            d = complex(r.x - a)
            z = (1 / G13) * (3 * a * d ** (2 / 3) + 9 / 4 * d ** (4 / 3))
            assert complex(r.re, r.im) == pytest.approx(z, rel=1e-12)
        assert s["caputo/code"][0].classification == "complex"

    def test_figure_8(self):
        s = by_series(figure_records(8))
        assert set(s) == {"alpha=1/2", "alpha=1", "alpha=3/2", "alpha=2", "alpha=5/2", "f(x)"}
        for r in s["alpha=1"]:
            assert r.re == math.cos(r.x)
        for r in s["alpha=5/2"]:
            z = math.cos(r.x) * complex(math.sin(r.x) / r.x) ** 1.5
            assert complex(r.re, r.im) == pytest.approx(z, rel=1e-12, abs=1e-300)
            assert r.classification == ("real" if math.sin(r.x) > 0 else "complex")
        for r in s["f(x)"]:
            assert r.re == math.sin(r.x)

    @pytest.mark.parametrize("figure_id", range(8, 17))
    def test_order_one_series_is_classical(self, figure_id):
        spec = FIGURES[figure_id]
        df = derivative(parse(spec.functions[0]))
        for r in by_series(figure_records(figure_id))["alpha=1"]:
            d = evaluate(df, r.x)
            if d.ok:
                assert r.re == pytest.approx(d.value, rel=1e-12, abs=1e-300)
            else:
                assert math.isnan(r.re)

    @pytest.mark.parametrize("figure_id", range(4, 17))
    def test_classification_matches_values(self, figure_id):
        for r in figure_records(figure_id):
            if r.classification in ("pole", "domain_error"):
                assert math.isnan(r.re)
            else:
                assert r.classification == ("real" if r.im == 0.0 else "complex")

    @pytest.mark.parametrize("figure_id", sorted(FIGURES))
    def test_every_figure_writes(self, figure_id, tmp_path):
        path = write_figure(figure_id, tmp_path)
        assert path.name == f"figure_{figure_id:02d}.csv"
        first = path.read_text().splitlines()[0]
        assert first == "x,series,re,im,classification"

    def test_byte_deterministic(self, tmp_path):
        for run_dir in ("one", "two"):
            assert run(["figure", "--id", "all", "--out", str(tmp_path / run_dir)])[0] == 0
        for figure_id in FIGURES:
            name = f"figure_{figure_id:02d}.csv"
            assert (tmp_path / "one" / name).read_bytes() == (tmp_path / "two" / name).read_bytes()

    def test_gnuplot(self, tmp_path):
        path = write_figure(8, tmp_path)
        script = write_gnuplot_script(8, path).read_text()
        assert "figure_08.csv" in script and "alpha=5/2" in script

    def test_bad_id(self, tmp_path):
        assert run(["figure", "--id", "17", "--out", str(tmp_path)])[0] == 1
