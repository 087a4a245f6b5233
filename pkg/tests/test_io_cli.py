import json

import pytest

from localheat import generate_instance, GeneratorParams, io
from localheat.cli import cmd_fuzz, build_parser, main
from localheat.harness import default_engines, greedy_engine
from localheat.model import Schedule


def test_json_round_trip(w1):
    assert io.loads_json(io.dumps_json(w1)) == w1
    assert io.loads(io.dumps_json(w1)) == w1


def test_columns_round_trip(w1):
    text = io.dumps_columns(w1)
    assert io.loads(text) == w1
    assert io.loads_columns(text) == w1


def test_real_valued_round_trip():
    inst = generate_instance(2, GeneratorParams(horizon=9, integral=False))
    assert io.loads_json(io.dumps_json(inst)) == inst
    assert io.loads_columns(io.dumps_columns(inst)) == inst


def test_columns_hand_written():
    text = """# heat_per_run: 2
# lower: 0
# upper: 0 3 3 3 3
demand price
1 3
1 1
1 4
1 2
"""
    inst = io.loads(text, "columns")
    assert inst.horizon == 4 and inst.price.tolist() == [3, 1, 4, 2]


def write(tmp_path, inst, name="inst.json"):
    path = tmp_path / name
    io.write_instance(inst, path)
    return str(path)


@pytest.mark.parametrize("algorithm", ["naive", "tree", "dsu", "dp", "brute"])
def test_cli_solve(tmp_path, capsys, w1, algorithm):
    assert main(["solve", write(tmp_path, w1), "--algorithm", algorithm]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["cost"] == 4 and out["schedule"] == [1, 1, 0, 0]


def test_cli_solve_emit_bounds(tmp_path, capsys, w1):
    assert main(["solve", write(tmp_path, w1), "--emit-bounds"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["lower"] == [0, 1, 1, 2, 2] and out["upper"] == [0, 1, 2, 3, 3]


def test_cli_solve_columns(tmp_path, capsys, w1):
    assert main(["solve", write(tmp_path, w1, "inst.txt"), "--format", "columns"]) == 0
    assert json.loads(capsys.readouterr().out)["cost"] == 4


def test_cli_order_file(tmp_path, capsys, w1):
    order = tmp_path / "order.txt"
    order.write_text("2 4 1 3\n")
    assert main(["solve", write(tmp_path, w1), "--order-file", str(order)]) == 0
    assert json.loads(capsys.readouterr().out)["cost"] == 4
    order.write_text("2 2 1 3\n")
    assert main(["solve", write(tmp_path, w1), "--order-file", str(order)]) == 1


def test_cli_infeasible(tmp_path, capsys, short_of_heat):
    path = write(tmp_path, short_of_heat)
    assert main(["solve", path]) == 2
    assert "lower[1]" in capsys.readouterr().err
    assert main(["check", path]) == 2
    assert main(["check", path, "--verbose"]) == 2
    assert "first violation at t=1" in capsys.readouterr().out


def test_cli_check_feasible(tmp_path, capsys, w1):
    assert main(["check", write(tmp_path, w1)]) == 0
    assert capsys.readouterr().out.strip() == "feasible"


def test_cli_errors(tmp_path, capsys, w1):
    path = write(tmp_path, w1)
    with pytest.raises(SystemExit) as exc:
        main(["solve", path, "--algorithm", "simplex"])
    assert exc.value.code == 1
    assert main(["solve", str(tmp_path / "missing.json")]) == 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"horizon": 1, "heat_per_run": 0, "demand": [0], "price": [1],
                               "lower": [0, 0], "upper": [0, 1]}))
    assert main(["solve", str(bad)]) == 1


def test_cli_generate(tmp_path, capsys):
    assert main(["generate", "--seed", "3", "--horizon", "7"]) == 0
    inst = io.loads(capsys.readouterr().out)
    assert inst.horizon == 7
    out = tmp_path / "g.txt"
    assert main(["generate", "--seed", "3", "--horizon", "7", "--format", "columns", "-o", str(out)]) == 0
    assert io.read_instance(out) == inst


def test_cli_fuzz(capsys):
    assert main(["fuzz", "--count", "0"]) == 0
    assert main(["fuzz", "--count", "25", "--t-max", "8"]) == 0
    assert "ok: 25 instances" in capsys.readouterr().out


def test_cli_fuzz_reports_disagreement(tmp_path, capsys):
    def broken(pb, price):
        # drop the last run of an otherwise correct schedule
        x = greedy_engine("dsu")(pb, price).decisions.copy()
        on = x.nonzero()[0]
        if len(on):
            x[on[-1]] = 0
        return Schedule.from_decisions(x, price)

    engines = default_engines() | {"broken": broken}
    args = build_parser().parse_args(["fuzz", "--count", "50", "--dump", str(tmp_path / "f.json")])
    assert cmd_fuzz(args, engines) == 1
    err = capsys.readouterr().err
    assert "DISAGREEMENT" in err and "broken" in err and "reproduce with" in err
    assert io.read_instance(tmp_path / "f.json").horizon >= 1


def test_cli_bench(capsys):
    assert main(["bench", "--sizes", "256", "512", "--repeats", "1", "--engines", "dsu", "tree"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("engine\tsize") and "# slope\tdsu" in out
