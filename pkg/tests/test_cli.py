import io
import json

import pytest

from sqtiled.cli import main


def run(args, stdin=""):
    out = io.StringIO()
    code = main(args, stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_construct_rows():
    code, out = run(["construct", "--stratum", "4", "--component", "odd", "--format", "rows"])
    assert code == 0
    assert out == "0 1 2 3 4 5\n2 5 4 1 3 0\n"


def test_classify_from_stdin():
    code, out = run(["classify"], "0 1 2 3 4 5\n2 5 4 1 3 0\n")
    assert code == 0
    assert out == "stratum=H(4) component=odd cylinders=1,1 squares=5 minimal=yes\n"


def test_inadmissible_component_exit_code(capsys):
    code, out = run(["construct", "--stratum", "4", "--component", "even"])
    assert code == 2
    assert "component does not exist" in capsys.readouterr().err


def test_usage_errors():
    assert run(["frobnicate"])[0] == 1
    assert run(["construct"])[0] == 1
    assert run(["construct", "--stratum", "4", "--component", "sideways"])[0] == 1


def test_malformed_surface(capsys):
    code, _ = run(["classify"], "0 1 2\n1 1 0\n")
    assert code == 2


@pytest.mark.parametrize("fmt", ["json", "cycles", "summary", "recipe"])
def test_construct_formats(fmt):
    code, out = run(["construct", "--stratum", "6,2", "--component", "even", "--format", fmt])
    assert code == 0 and out.endswith("\n")
    if fmt == "json":
        rec = json.loads(out)
        assert rec["component"] == "even"
    if fmt in ("json", "cycles"):
        code, back = run(["classify"], out)
        assert back.startswith("stratum=H(6,2) component=even")


def test_marked_point_syntax():
    code, out = run(["construct", "--stratum", "4,0,0", "--component", "odd", "--format", "summary"])
    assert code == 0
    assert out == "stratum=H(4,0,0) component=odd cylinders=1,1 squares=7 minimal=yes\n"


def test_census_command():
    code, out = run(["census", "--squares", "4", "--stratum", "2", "--cyl", "1,1"])
    assert code == 0
    lines = out.splitlines()
    json.loads(lines[0])
    assert "total=1" in lines


def test_census_budget():
    assert run(["census", "--squares", "20"])[0] == 2


def test_catalog_commands():
    code, out = run(["catalog", "list"])
    assert code == 0 and "odd:order" in out
    code, out = run(["catalog", "emit", "--key", "exc:nonhyp(3,3)"])
    assert out == "0 1 2 3 4 5 6 7 8\n2 8 6 5 7 4 1 3 0\n"
    assert run(["catalog", "emit", "--key", "exc:nope"])[0] == 2


def test_combine(tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("0 1 2 3 4 5\n2 5 4 1 3 0\n")
    code, out = run(["combine", "--op", "concat", "--a", str(f), "--b", "odd:4"])
    assert out == "0 1 2 3 4 5 6 7 8 9 10\n2 5 4 6 3 7 10 9 1 8 0\n"
    code, out = run(["combine", "--op", "gadget2", "--a", "odd:4", "--format", "summary"])
    assert out.startswith("stratum=H(6,2) component=odd")
    assert run(["combine", "--op", "concat", "--a", "odd:4"])[0] == 1
    assert run(["combine", "--op", "h11", "--a", "odd:4"])[0] == 2


def test_filling_pair_and_dilatation():
    code, out = run(["filling-pair", "--genus", "3", "--punctures", "2", "--intersections", "7", "--polygons", "20,4,4"])
    assert code == 0 and "regions=20,4,4 intersections=7" in out
    assert run(["filling-pair", "--genus", "2", "--intersections", "4", "--polygons", "8,4"])[0] == 2
    code, out = run(["dilatation", "--n", "1", "--word", "a1,b-1"])
    assert "trace=3 " in out and "pseudo_anosov=yes" in out
    assert run(["dilatation", "--n", "1", "--word", "a1,a-1"])[0] == 2


def test_output_is_deterministic():
    args = ["construct", "--stratum", "5,3,2,2", "--component", "connected", "--format", "json"]
    assert run(args) == run(args)
