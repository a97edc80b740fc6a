import json
import subprocess
import sys

import pytest

from strongatoms.cli import main
from strongatoms.specfile import SpecFileError, load_spec, parse_spec_dict, spec_to_dict

CYCLIC3_SPEC = """{
  "group": {"free_rank": 0, "torsion": [3]},
  "classes": [[1], [2]],
  "labels": ["g", "2g"],
  "mult": [1, 1]
}
"""

SIGNED_BASIS_SPEC = """{
  "group": {"free_rank": 2, "torsion": []},
  "classes": [[1,0], [0,1], [-1,0], [0,-1], [1,1], [-1,-1]],
  "labels": ["e1", "e2", "-e1", "-e2", "f", "-f"],
  "mult": [1, 1, 1, 1, 1, 1]
}
"""

GOLDEN_ATOMS_REPORT = """{
  "command": "atoms",
  "inputs": {
    "options": {
      "budget": 10000000
    },
    "spec": {
      "classes": [
        [
          1
        ],
        [
          2
        ]
      ],
      "group": {
        "free_rank": 0,
        "torsion": [
          3
        ]
      },
      "labels": [
        "g",
        "2g"
      ],
      "mult": [
        1,
        1
      ]
    }
  },
  "report_version": 1,
  "results": {
    "atoms": [
      {
        "absolutely_irreducible": true,
        "display": "2g^3",
        "exponents": [
          0,
          3
        ],
        "length": 3,
        "support": [
          "2g"
        ]
      },
      {
        "absolutely_irreducible": false,
        "display": "g 2g",
        "exponents": [
          1,
          1
        ],
        "length": 2,
        "support": [
          "g",
          "2g"
        ]
      },
      {
        "absolutely_irreducible": true,
        "display": "g^3",
        "exponents": [
          3,
          0
        ],
        "length": 3,
        "support": [
          "g"
        ]
      }
    ],
    "certificate": {
      "columns": 2,
      "method": "completion-search",
      "node_budget": 10000000,
      "slack_columns": 1
    },
    "count": 3
  },
  "status": "ok"
}
"""


@pytest.fixture
def cyclic3(tmp_path):
    path = tmp_path / "cyclic3.json"
    path.write_text(CYCLIC3_SPEC)
    return str(path)


@pytest.fixture
def signed_basis(tmp_path):
    path = tmp_path / "signed_basis.json"
    path.write_text(SIGNED_BASIS_SPEC)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_atoms_machine_golden(cyclic3, capsys):
    code, out = run_cli(capsys, "atoms", "--spec", cyclic3, "--machine")
    assert code == 0
    assert out == GOLDEN_ATOMS_REPORT


def test_machine_reports_deterministic(signed_basis, capsys):
    _, out1 = run_cli(capsys, "classify", "--spec", signed_basis, "--machine")
    _, out2 = run_cli(capsys, "classify", "--spec", signed_basis, "--machine")
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["results"]["row_label"] == "(-,+,-)"
    assert payload["results"]["has_prime"] is False


def test_factor_command(signed_basis, capsys):
    code, out = run_cli(capsys, "factor", "--spec", signed_basis,
                        "--sequence", "e1,e2,-f,-e1,-e2,f", "--machine")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["count"] == 2
    assert payload["results"]["lengths"] == [2, 3]
    assert payload["results"]["elasticity"] == "3/2"


def test_factor_exponent_vector_form(signed_basis, capsys):
    code, out = run_cli(capsys, "factor", "--spec", signed_basis,
                        "--sequence", "1,1,1,1,1,1", "--machine")
    assert code == 0
    assert json.loads(out)["results"]["lengths"] == [2, 3]


def test_lengths_command(signed_basis, capsys):
    code, out = run_cli(capsys, "lengths", "--spec", signed_basis,
                        "--sequence", "f,-f", "--machine")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"]["lengths"] == [1]
    assert payload["results"]["elasticity"] == "1"


def test_absirred_command(cyclic3, capsys):
    code, out = run_cli(capsys, "absirred", "--spec", cyclic3,
                        "--sequence", "g,2g", "--nmax", "3", "--machine")
    assert code == 0
    entry = json.loads(out)["results"]["atoms"][0]
    assert entry["support_criterion"] is False
    assert entry["kernel_criterion"] is False
    assert entry["witness"]["n"] == 3
    assert entry["brute_force_up_to_nmax"] is False


def test_absirred_all_atoms(cyclic3, capsys):
    code, out = run_cli(capsys, "absirred", "--spec", cyclic3, "--machine")
    assert code == 0
    entries = json.loads(out)["results"]["atoms"]
    assert [e["support_criterion"] for e in entries] == [True, False, True]


def test_classify_human_output(cyclic3, capsys):
    code, out = run_cli(capsys, "classify", "--spec", cyclic3)
    assert code == 0
    assert "row (+,+,-)" in out


def test_verify_exit_code_and_determinism(capsys):
    code1, out1 = run_cli(capsys, "verify", "--machine")
    code2, out2 = run_cli(capsys, "verify", "--machine")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["status"] == "ok"
    assert payload["results"]["failed"] == 0


def test_exit_code_input_errors(tmp_path, capsys):
    assert main(["atoms", "--spec", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["atoms", "--spec", str(bad)]) == 2
    dup = tmp_path / "dup.json"
    dup.write_text('{"group": {"free_rank": 0, "torsion": [3]}, "classes": [[1], [4]]}')
    assert main(["atoms", "--spec", str(dup)]) == 2


def test_exit_code_non_zero_sum(cyclic3, capsys):
    assert main(["factor", "--spec", cyclic3, "--sequence", "g"]) == 2


def test_exit_code_budget(signed_basis, capsys):
    assert main(["factor", "--spec", signed_basis,
                 "--sequence", "1,1,1,1,1,1", "--budget", "2"]) == 3


def test_spec_round_trip(signed_basis, capsys):
    spec, labels = load_spec(signed_basis)
    reparsed, labels2 = parse_spec_dict(spec_to_dict(spec, labels))
    assert labels == labels2
    assert reparsed.class_set == spec.class_set
    assert reparsed.mult == spec.mult
    # the machine report echoes the canonical spec dict
    _, out = run_cli(capsys, "atoms", "--spec", signed_basis, "--machine")
    echoed = json.loads(out)["inputs"]["spec"]
    respec, _ = parse_spec_dict(echoed)
    assert respec.class_set == spec.class_set


def test_spec_parsing_reduces_and_validates():
    spec, _ = parse_spec_dict({
        "group": {"free_rank": 0, "torsion": [3]},
        "classes": [[4], [2]],
    })
    assert [g.coords() for g in spec.class_set.classes] == [(1,), (2,)]
    assert spec.mult == (1, 1)
    with pytest.raises(SpecFileError):
        parse_spec_dict({"group": {"free_rank": 0, "torsion": [3]},
                         "classes": [[1], [2]], "mult": [1, 0]})
    with pytest.raises(SpecFileError):
        parse_spec_dict({"group": {"free_rank": 0, "torsion": [3]},
                         "classes": [[1], [2]], "labels": ["a", "a"]})
    spec_inf, _ = parse_spec_dict({
        "group": {"free_rank": 0, "torsion": [2]},
        "classes": [[0], [1]],
        "mult": ["inf", 2],
    })
    assert spec_inf.capped_mult() == (2, 2)


def test_bundled_spec_files_parse(capsys):
    import pathlib
    spec_dir = pathlib.Path(__file__).resolve().parent.parent / "specs"
    files = sorted(spec_dir.glob("*.json"))
    assert files
    for path in files:
        spec, labels = load_spec(path)
        assert len(labels) == len(spec.class_set)
        code, _ = run_cli(capsys, "atoms", "--spec", str(path), "--machine")
        assert code == 0


def test_module_entry_point(cyclic3):
    result = subprocess.run(
        [sys.executable, "-m", "strongatoms.cli", "atoms", "--spec", cyclic3,
         "--machine"],
        capture_output=True, text=True)
    assert result.returncode == 0
    assert json.loads(result.stdout)["results"]["count"] == 3


def test_parallel_flag_accepted(cyclic3, capsys):
    code, out = run_cli(capsys, "atoms", "--spec", cyclic3, "--parallel", "--machine")
    assert code == 0
