import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from flag_reconstruction.canonical import is_isomorphic
from flag_reconstruction.cli import EXIT_CERTIFIED, EXIT_ERROR, EXIT_NO_CERTIFICATE, main
from flag_reconstruction.families import cross_polytope, path, wheel
from flag_reconstruction.formats import emit_graph6, parse_graph6
from flag_reconstruction.reconstruction import deck
from tests.corpus import PROJECTIVE_PLANE_FACETS


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def test_gen_then_analyze_certifies(runner: CliRunner) -> None:
    generated = runner.invoke(main, ["gen", "cross_polytope", "3"])
    assert generated.exit_code == 0
    result = runner.invoke(main, ["analyze"], input=generated.stdout)
    assert result.exit_code == EXIT_CERTIFIED
    report = json.loads(result.stdout)
    assert report["certificate"]["path"] == "homology_manifold"
    assert report["complex"]["f_vector"] == [6, 12, 8]


def test_analyze_without_certificate(runner: CliRunner) -> None:
    result = runner.invoke(main, ["analyze"], input=emit_graph6(path(4)) + "\n")
    assert result.exit_code == EXIT_NO_CERTIFICATE
    assert json.loads(result.stdout)["certificate"]["path"] == "none"


def test_analyze_edge_list(runner: CliRunner) -> None:
    result = runner.invoke(main, ["analyze", "--format", "edges"], input="a b\nb c\nc a\n")
    assert result.exit_code == EXIT_NO_CERTIFICATE
    assert json.loads(result.stdout)["input"]["format"] == "edges"


@pytest.mark.parametrize("text", ["A!\n", "C~\nC~\n", ""])
def test_malformed_input_exits_with_error(runner: CliRunner, text: str) -> None:
    result = runner.invoke(main, ["analyze"], input=text)
    assert result.exit_code == EXIT_ERROR
    assert result.stderr.startswith("error:")
    assert not result.stdout


def test_usage_errors(runner: CliRunner) -> None:
    assert runner.invoke(main, ["analyze", "--no-such-flag"]).exit_code == EXIT_ERROR
    assert runner.invoke(main, ["gen", "cycle", "2"]).exit_code == EXIT_ERROR
    assert runner.invoke(main, ["scan", "--max-n", "8"]).exit_code == EXIT_ERROR


def test_dimension_cap(runner: CliRunner) -> None:
    octahedron = emit_graph6(cross_polytope(3))
    result = runner.invoke(main, ["analyze", "--max-dim", "1"], input=octahedron)
    assert result.exit_code == EXIT_ERROR
    assert "cap" in result.stderr


def test_json_output_file(runner: CliRunner, tmp_path: Path) -> None:
    target = tmp_path / "report.json"
    result = runner.invoke(
        main, ["analyze", "--json", str(target)], input=emit_graph6(cross_polytope(3))
    )
    assert result.exit_code == EXIT_CERTIFIED
    assert result.stdout.strip() == "certificate: homology_manifold"
    assert json.loads(target.read_text())["schema_version"] == "1"


def test_repeated_runs_are_identical(runner: CliRunner) -> None:
    octahedron = emit_graph6(cross_polytope(3))
    first = runner.invoke(main, ["analyze"], input=octahedron)
    second = runner.invoke(main, ["analyze"], input=octahedron)
    assert first.stdout == second.stdout


def test_timings_flag(runner: CliRunner) -> None:
    result = runner.invoke(main, ["analyze", "--timings"], input=emit_graph6(cross_polytope(3)))
    assert "flag_complex" in json.loads(result.stdout)["timings"]


def test_help_documents_defaults(runner: CliRunner) -> None:
    analyze_help = " ".join(runner.invoke(main, ["analyze", "--help"]).stdout.split())
    assert "--timings" in analyze_help
    assert "identical across runs" in analyze_help
    scan_help = " ".join(runner.invoke(main, ["scan", "--help"]).stdout.split())
    assert "default: 7" in scan_help


def test_deck(runner: CliRunner) -> None:
    result = runner.invoke(main, ["deck"], input=emit_graph6(path(3)))
    assert result.exit_code == 0
    expected = [
        f"{emit_graph6(card.form.to_graph())} {card.multiplicity}" for card in deck(path(3)).cards
    ]
    assert result.stdout.splitlines() == expected


def test_reconstruct_octahedron_from_card(runner: CliRunner) -> None:
    result = runner.invoke(main, ["reconstruct", "--dim", "2"], input=emit_graph6(wheel(4)))
    assert result.exit_code == 0
    assert is_isomorphic(parse_graph6(result.stdout), cross_polytope(3))


def test_reconstruct_needs_dimension(runner: CliRunner) -> None:
    result = runner.invoke(main, ["reconstruct"], input=emit_graph6(wheel(4)))
    assert result.exit_code == EXIT_ERROR


def test_scan_small_orders(runner: CliRunner) -> None:
    pairs = runner.invoke(main, ["scan", "--max-n", "2"])
    assert pairs.exit_code == 0
    assert pairs.stdout.splitlines()[-1] == "2 graphs scanned, 1 hypomorphic groups"

    six = runner.invoke(main, ["scan", "--max-n", "6", "--jobs", "2"])
    assert six.stdout.splitlines() == ["156 graphs scanned, 0 hypomorphic groups"]


def test_scan_corpus(runner: CliRunner, tmp_path: Path) -> None:
    corpus = tmp_path / "corpus.g6"
    corpus.write_text("Cl\nCh\n\nC~\n")
    result = runner.invoke(main, ["scan", str(corpus)])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["3 graphs scanned, 0 hypomorphic groups"]


def test_homology_of_projective_plane(runner: CliRunner, tmp_path: Path) -> None:
    source = tmp_path / "rp2.txt"
    source.write_text("\n".join(" ".join(facet) for facet in PROJECTIVE_PLANE_FACETS) + "\n")
    result = runner.invoke(main, ["homology", str(source)])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "dimension 2, f-vector [6, 15, 10]"
    degree_one = next(line for line in lines if line.split()[0] == "1")
    assert "H~ Z/2" in degree_one
    degree_two = next(line for line in lines if line.split()[0] == "2")
    assert "H~^ Z/2" in degree_two


def test_schema(runner: CliRunner) -> None:
    result = runner.invoke(main, ["schema"])
    assert result.exit_code == 0
    assert "certificate" in json.loads(result.stdout)["properties"]
