import csv

import pytest

from lgpolar import presets
from lgpolar.cli import main, parse_ebno

TOY_CONFIG = """\
# tiny system, fast enough for CLI round trips
m = 2
n0 = 4
ka = 2
kb = 4
s = 2
ni = 8
max_iter = 30
interleaver_seed = 0
"""


def _write_toy(tmp_path, extra="", name="toy.cfg"):
    path = tmp_path / name
    path.write_text(TOY_CONFIG + extra)
    return path


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_parse_ebno_single_value():
    assert parse_ebno("2.5") == [2.5]
    assert parse_ebno("-1") == [-1.0]


def test_parse_ebno_sweep_is_inclusive():
    assert parse_ebno("1:0.5:3") == pytest.approx([1.0, 1.5, 2.0, 2.5, 3.0])
    assert parse_ebno("0:0.25:1") == pytest.approx([0.0, 0.25, 0.5, 0.75, 1.0])
    assert parse_ebno("2:1:2") == [2.0]


@pytest.mark.parametrize("bad", ["1:0:3", "3:1:1", "1:2", "abc", "1:a:3", ""])
def test_parse_ebno_rejects_malformed_input(bad):
    with pytest.raises(ValueError):
        parse_ebno(bad)


def test_unknown_mode_exits_via_argparse(tmp_path):
    cfg = _write_toy(tmp_path)
    with pytest.raises(SystemExit) as exc:
        main(["--config", str(cfg), "--mode", "sideways", "--ebno", "1",
              "--max-frames", "1", "--out", str(tmp_path / "x.csv")])
    assert exc.value.code == 2


def test_global_sweep_end_to_end(tmp_path, capsys):
    cfg = _write_toy(tmp_path)
    out = tmp_path / "global.csv"
    code = main(["--config", str(cfg), "--mode", "global", "--ebno", "2:1:4",
                 "--max-frames", "40", "--out", str(out)])
    assert code == 0
    rows = _read_csv(out)
    assert len(rows) == 4
    assert rows[1][0] == "toy"
    assert [r[2] for r in rows[1:]] == ["2", "3", "4"]
    assert all(int(r[3]) == 40 for r in rows[1:])
    err = capsys.readouterr().err
    assert err.count("mode=global") == 3


def test_cli_output_is_reproducible(tmp_path):
    cfg = _write_toy(tmp_path)
    out_a, out_b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (out_a, out_b):
        assert main(["--config", str(cfg), "--mode", "local", "--ebno",
                     "1:1:2", "--max-frames", "30", "--seed", "3",
                     "--out", str(out)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    rows = _read_csv(out_a)
    assert rows[0][-1] == "subblock"
    assert [r[-1] for r in rows[1:]] == ["1", "2", "all", "1", "2", "all"]


def test_conventional_mode_accepts_preset_name(tmp_path):
    out = tmp_path / "conv.csv"
    code = main(["--config", "setting1", "--mode", "conventional", "--ebno",
                 "5", "--max-frames", "2", "--out", str(out)])
    assert code == 0
    rows = _read_csv(out)
    assert rows[1][:2] == ["setting1", "conventional"]


def test_min_sum_flag_runs(tmp_path):
    cfg = _write_toy(tmp_path)
    out = tmp_path / "ms.csv"
    assert main(["--config", str(cfg), "--mode", "global", "--ebno", "3",
                 "--max-frames", "20", "--min-sum", "--out", str(out)]) == 0
    assert len(_read_csv(out)) == 2


def test_no_early_stop_burns_the_full_budget(tmp_path):
    path = tmp_path / "toy5.cfg"
    path.write_text(TOY_CONFIG.replace("max_iter = 30", "max_iter = 5"))
    out = tmp_path / "nes.csv"
    assert main(["--config", str(path), "--mode", "global", "--ebno", "6",
                 "--max-frames", "10", "--no-early-stop", "--out", str(out)]) == 0
    rows = _read_csv(out)
    assert rows[1][8] == "5.0000"


def test_missing_config_file_fails_cleanly(tmp_path, capsys):
    out = tmp_path / "x.csv"
    code = main(["--config", str(tmp_path / "nope.cfg"), "--mode", "global",
                 "--ebno", "1", "--max-frames", "1", "--out", str(out)])
    assert code == 1
    assert "error:" in capsys.readouterr().err
    assert not out.exists()


def test_invalid_config_contents_fail_cleanly(tmp_path, capsys):
    path = tmp_path / "broken.cfg"
    path.write_text("m = 2\nn0 = 4\n")  # required keys missing
    code = main(["--config", str(path), "--mode", "global", "--ebno", "1",
                 "--max-frames", "1", "--out", str(tmp_path / "x.csv")])
    assert code == 1
    assert "missing required" in capsys.readouterr().err


def test_inconsistent_dimensions_fail_cleanly(tmp_path, capsys):
    cfg = _write_toy(tmp_path, name="bad.cfg")
    text = cfg.read_text().replace("s = 2", "s = 3")
    cfg.write_text(text)
    code = main(["--config", str(cfg), "--mode", "global", "--ebno", "1",
                 "--max-frames", "1", "--out", str(tmp_path / "x.csv")])
    assert code == 1
    assert "S_i" in capsys.readouterr().err


def test_config_parser_diagnostics():
    with pytest.raises(ValueError, match="unknown config key"):
        presets.parse_config_text("m = 2\nbogus = 1\n")
    with pytest.raises(ValueError, match="duplicate config key"):
        presets.parse_config_text("m = 2\nm = 4\n")
    with pytest.raises(ValueError, match="<config>:2"):
        presets.parse_config_text("m = 2\nn0 = x\n")
    with pytest.raises(ValueError, match="expected 'key = value'"):
        presets.parse_config_text("just words\n")
    with pytest.raises(ValueError, match="boolean"):
        presets.parse_config_text(
            "m=1\nn0=4\nka=2\nkb=2\ns=4\nni=8\nearly_stop=maybe\n"
        )


def test_config_parser_fills_defaults_and_strips_comments():
    params = presets.parse_config_text(
        "m = 2  # subblocks\n\nn0 = 4\nka = 2\nkb = 4\ns = 2\nni = 8\n"
    )
    assert params["max_iter"] == 200
    assert params["early_stop"] is True
    assert params["design_ebno_db"] == 0.0
    assert params["interleaver_seed"] == 1


def test_load_params_returns_a_copy():
    _, params = presets.load_params("setting1")
    params["ni"] = 0
    assert presets.PRESETS["setting1"]["ni"] == 1024
