"""Tests for the hessgk command line."""

import io
import json
import tempfile
import unittest
import contextlib

from pathlib import Path

from hessgk.cli import (
    EXIT_GUARD,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    main,
)
from hessgk.utils import (
    get_guards,
    get_logger,
    load_config,
    load_default_config,
    load_reference_json,
)


def run_cli(*argv: str) -> tuple[int, str]:
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        status = main(list(argv))
    return status, buffer.getvalue()


class TestCli(unittest.TestCase):
    def setUp(self) -> None:
        self.logger = get_logger(__name__ + ".TestCli")

    def test_csf(self) -> None:
        status, out = run_cli("csf", "--hess", "3,3,3")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "(q^3+2q^2+2q+1)e_3")

        status, out = run_cli("csf", "--hess", "2,2", "--method", "coloring")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "(q+1)e_2")

    def test_gk(self) -> None:
        status, out = run_cli("gk", "--hess", "1", "--k", "0")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "1")

        status, out = run_cli("gk", "--hess", "2,3,3", "--k", "2")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "qe_2")

    def test_graph(self) -> None:
        status, out = run_cli("graph", "--graph", "2; 1-2; root=1")
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(out.strip(), "2e_2")

    def test_json(self) -> None:
        status, out = run_cli("--format", "json", "csf", "--hess", "2,2")
        self.assertEqual(status, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["basis"], "e")
        self.assertEqual(
            data["terms"], [{"partition": [2], "coeff": [1, 1]}]
        )

    def test_usage_errors(self) -> None:
        self.assertEqual(run_cli("csf", "--hess", "2,1")[0], EXIT_USAGE)
        self.assertEqual(
            run_cli("gk", "--hess", "2,2", "--k", "5")[0], EXIT_USAGE
        )
        self.assertEqual(
            run_cli("graph", "--graph", "2; 1-1; root=1")[0], EXIT_USAGE
        )
        self.assertEqual(
            run_cli("--max-perm-n", "0", "csf", "--hess", "1")[0], EXIT_USAGE
        )
        self.assertEqual(run_cli("llt-face", "--n", "0")[0], EXIT_USAGE)
        self.assertEqual(
            run_cli("verify", "--suite", "graphs", "--max-n", "8")[0],
            EXIT_USAGE,
        )
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                build_parser().parse_args([])

    def test_guard(self) -> None:
        status, _ = run_cli(
            "--max-perm-n", "2", "csf", "--hess", "2,3,3", "--method",
            "coloring",
        )
        self.assertEqual(status, EXIT_GUARD)
        self.assertEqual(
            get_guards()["max_perm_n"],
            load_default_config()["guards"]["max_perm_n"],
        )

    def test_delta_table(self) -> None:
        status, out = run_cli("delta-table", "--hess", "2,2", "--k", "1")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("m = (2, 2), k = 1"))

        status, out = run_cli(
            "--format", "json", "delta-table", "--hess", "3,5,5,5,6,6",
            "--k", "3",
        )
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(len(json.loads(out)["rows"]), 12)

    def test_llt_face(self) -> None:
        status, out = run_cli("llt-face", "--n", "3")
        self.assertEqual(status, EXIT_OK)
        self.assertIn("match: True", out)

    def test_verify(self) -> None:
        status, out = run_cli("verify", "--suite", "toric", "--max-n", "3")
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(out.startswith("PASS toric:"))
        self.assertNotIn("FAIL", out)

        status, out = run_cli(
            "--format", "json", "verify", "--suite", "toric", "--max-n", "2"
        )
        self.assertEqual(status, EXIT_OK)
        self.assertTrue(json.loads(out)["passed"])

        expected = {
            "g": "g_k is Schur-positive",
            "positivity": "non-negative at q = 1",
            "graphs": "every root",
            "rho": "omega(s_la) = s_la'",
        }
        for suite, identity in expected.items():
            status, out = run_cli("verify", "--suite", suite, "--max-n", "3")
            self.assertEqual(status, EXIT_OK, out)
            self.assertIn(identity, out)

    def test_config(self) -> None:
        self.assertEqual(load_config(), load_default_config())
        self.assertEqual(load_config("reference.json"), load_reference_json())
        self.assertIn("delta_table", load_reference_json())
        with self.assertRaises(ValueError):
            load_config("missing.json")
        with self.assertRaises(ValueError):
            load_config("__init__.py")

    def test_cache(self) -> None:
        with tempfile.TemporaryDirectory() as tmp_dir:
            cache_path = Path(tmp_dir).joinpath("cache.json")
            status, _ = run_cli(
                "--cache", str(cache_path), "csf", "--hess", "2,2"
            )
            self.assertEqual(status, EXIT_OK)
            self.assertTrue(cache_path.exists())

            status, out = run_cli(
                "--cache", str(cache_path), "csf", "--hess", "2,2"
            )
            self.assertEqual(status, EXIT_OK)
            self.assertEqual(out.strip(), "(q+1)e_2")


if __name__ == "__main__":
    unittest.main()
