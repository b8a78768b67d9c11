"""Tests for the phaseperturb command line."""

import logging
from collections.abc import Iterator
from pathlib import Path

import numpy as np
import orjson
import pytest

from phase_perturbation.audio import load_matrix, write_wav
from phase_perturbation.cli import build_parser, main
from phase_perturbation.dsp import AudioBuffer
from phase_perturbation.logging import LOGGER_NAME
from phase_perturbation.models import StftConfig
from phase_perturbation.services import inspect


@pytest.fixture(autouse=True)
def reset_logging() -> Iterator[None]:
    """Drop handlers bound to captured streams after each test."""
    yield
    logging.getLogger(LOGGER_NAME).handlers.clear()


@pytest.fixture
def in_dir(tmp_path: Path) -> Path:
    """Input directory with two short clips."""
    root = tmp_path / "in"
    root.mkdir()
    rng = np.random.default_rng(71)
    for name in ("one.wav", "two.wav"):
        audio = AudioBuffer(samples=rng.uniform(-0.3, 0.3, 6000), sample_rate=16000)
        write_wav(root / name, audio)
    return root


def test_augment_writes_outputs(
    in_dir: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """augment writes every copy and the manifest, exit code 0."""
    out = tmp_path / "out"
    args = ["augment", "--in", str(in_dir), "--out", str(out), "--seed", "5"]
    code = main([*args, "--copies", "2"])
    assert code == 0
    assert (out / "one.phase_perturbation.1.wav").is_file()
    assert (out / "manifest.tsv").is_file()
    assert "Wrote 4 files" in capsys.readouterr().out


def test_augment_with_config_and_policy_override(in_dir: Path, tmp_path: Path) -> None:
    """--policy overrides the arm named in the config file."""
    config = tmp_path / "policy.conf"
    config.write_text("policy.name = vtlp\npolicy.output_bit_depth = 32\n")
    out = tmp_path / "out"
    args = ["augment", "--in", str(in_dir), "--out", str(out), "--seed", "1"]
    args += ["--config", str(config), "--policy", "specaug", "--jobs", "2"]
    code = main(args)
    assert code == 0
    assert (out / "two.specaug.0.wav").is_file()


def test_augment_policy_defaults_to_config_name(in_dir: Path, tmp_path: Path) -> None:
    """Without --policy the arm comes from policy.name in the config file."""
    config = tmp_path / "policy.conf"
    config.write_text("policy.name = vtlp\n")
    out = tmp_path / "out"
    args = ["augment", "--in", str(in_dir), "--out", str(out), "--seed", "2"]
    assert main([*args, "--config", str(config)]) == 0
    assert (out / "one.vtlp.0.wav").is_file()
    assert not list(out.glob("*.phase_perturbation.*"))


def test_empty_input_exits_with_error(
    tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """A directory with no WAV files exits 2 with a message on stderr."""
    (tmp_path / "empty").mkdir()
    empty = str(tmp_path / "empty")
    code = main(["augment", "--in", empty, "--out", str(tmp_path / "o"), "--seed", "0"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


def test_bad_config_exits_with_error(
    in_dir: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """An out-of-range config value is reported, not raised."""
    config = tmp_path / "bad.conf"
    config.write_text("phase.time_mask_ratio_cap = 1.5\n")
    args = ["augment", "--in", str(in_dir), "--out", str(tmp_path / "o"), "--seed", "0"]
    code = main([*args, "--config", str(config)])
    assert code == 2
    assert "phase.time_mask_ratio_cap" in capsys.readouterr().err


def test_seed_must_fit_in_64_bits() -> None:
    """Seeds outside [0, 2**64) are rejected by the parser."""
    with pytest.raises(SystemExit):
        build_parser().parse_args(
            ["augment", "--in", "a", "--out", "b", "--seed", str(2**64)]
        )


def test_inspect_command(in_dir: Path, tmp_path: Path) -> None:
    """inspect writes a dump with the default STFT shape."""
    out = tmp_path / "phase.txt"
    clip = str(in_dir / "one.wav")
    code = main(["inspect", "--in", clip, "--what", "phase", "--out", str(out)])
    assert code == 0
    header, _ = load_matrix(out)
    assert header.n_bins == 513


def test_inspect_config_alone_does_not_augment(in_dir: Path, tmp_path: Path) -> None:
    """--config without --policy only changes the STFT settings of the dump."""
    config = tmp_path / "policy.conf"
    config.write_text("policy.name = phase_perturbation\nstft.hop = 128\n")
    clip = in_dir / "one.wav"
    out = tmp_path / "phase.txt"
    args = ["inspect", "--in", str(clip), "--what", "phase", "--out", str(out)]
    assert main([*args, "--config", str(config)]) == 0

    plain = tmp_path / "plain.txt"
    inspect(clip, "phase", plain, config=StftConfig(hop=128))
    header, dumped = load_matrix(out)
    assert header.hop == 128
    assert np.array_equal(dumped, load_matrix(plain)[1])

    augmented = tmp_path / "augmented.txt"
    policy_args = ["--config", str(config), "--policy", "phase_perturbation"]
    args = ["inspect", "--in", str(clip), "--what", "phase", "--out", str(augmented)]
    assert main([*args, *policy_args, "--seed", "3"]) == 0
    header, perturbed = load_matrix(augmented)
    assert header.hop == 128
    assert not np.array_equal(perturbed, dumped)


def test_file_system_errors_exit_with_message(
    in_dir: Path, tmp_path: Path, capsys: pytest.CaptureFixture[str]
) -> None:
    """Missing inputs and unwritable outputs exit 2 instead of raising."""
    missing = str(tmp_path / "nope.wav")
    out = str(tmp_path / "o.txt")
    assert main(["inspect", "--in", missing, "--what", "phase", "--out", out]) == 2
    assert "error:" in capsys.readouterr().err

    assert main(["verify", "--in", missing]) == 2
    assert "error:" in capsys.readouterr().err

    clip = str(in_dir / "one.wav")
    args = ["inspect", "--in", clip, "--what", "amplitude", "--out", str(tmp_path)]
    assert main(args) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_command(capsys: pytest.CaptureFixture[str]) -> None:
    """verify exits 0 and prints one line per check."""
    assert main(["verify"]) == 0
    out = capsys.readouterr().out
    assert "round_trip" in out
    assert "FAIL" not in out


def test_verify_json_output(capsys: pytest.CaptureFixture[str]) -> None:
    """--json prints the report as a JSON document."""
    assert main(["verify", "--json"]) == 0
    printed = capsys.readouterr().out
    report = orjson.loads(printed[printed.index("{") :])
    assert report["source"] == "synthesized noise"
    assert all(check["passed"] for check in report["checks"])


def test_verify_negative_control_fails(capsys: pytest.CaptureFixture[str]) -> None:
    """--corrupt-window must make the self-test fail."""
    assert main(["verify", "--corrupt-window"]) == 1
    assert "round_trip" in capsys.readouterr().err
