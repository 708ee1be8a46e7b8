from __future__ import annotations

import json
import os
import tempfile
from io import StringIO
from unittest import TestCase

from primegb.cli import (
    EXIT_ERROR,
    EXIT_INCONSISTENT,
    EXIT_OK,
    EXIT_PASS_LIMIT,
    run,
)
from primegb.monomial import VarContext
from primegb.parser import parse_polynomial

WORKED_EXAMPLE = """\
# f1..f4
vars: 3
2*x0*x2 + 4*x1*x2 - 6
x2^2 - x2
x1^2 - x1
x0^2 - x0
"""


class TestCli(TestCase):
    def setUp(self) -> None:
        self.tmpdir = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmpdir.cleanup)

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.tmpdir.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def run_cli(self, *argv: str) -> tuple[int, str, str]:
        stdout, stderr = StringIO(), StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    def test_gb_paper_profile(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, err = self.run_cli("gb", path, "--profile", "paper")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[4:], ["x1 - x0", "x2 - x0", "3/2*x0 - 3/2"])
        self.assertEqual(err, "")
        self.assertEqual(self.run_cli("gb", path, "--profile", "paper")[1], out)

    def test_gb_json(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, _ = self.run_cli("gb", path, "--profile", "paper", "--json")
        self.assertEqual(code, EXIT_OK)
        document = json.loads(out)
        self.assertEqual(
            list(document),
            ["order", "profile", "passes", "contradiction", "verdict", "basis"],
        )
        self.assertEqual(document["profile"], "paper")
        self.assertEqual(document["passes"], 2)
        self.assertEqual(document["verdict"], "consistent")
        ctx = VarContext(num_vars=3)
        for text in document["basis"]:
            self.assertEqual(str(parse_polynomial(text, ctx)), text)

    def test_gb_reduced(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, _ = self.run_cli("gb", path, "--reduced")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["x0 - 1", "x1 - 1", "x2 - 1"])

        code, out, err = self.run_cli("gb", path, "--reduced", "--profile", "paper")
        self.assertEqual(code, EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("conservative", err)

    def test_pass_limit(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, err = self.run_cli(
            "gb", path, "--profile", "paper", "--max-passes", "1"
        )
        self.assertEqual(code, EXIT_PASS_LIMIT)
        self.assertEqual(out, "")
        self.assertIn("1 passes", err)

    def test_invalid_profile_order(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, _, err = self.run_cli("gb", path, "--profile", "paper", "--order", "lex")
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("prime order", err)

    def test_solvable(self):
        path = self.write("contradiction.txt", "vars: 1\nx0\nx0 + 1\n")
        code, out, _ = self.run_cli("solvable", path)
        self.assertEqual(code, EXIT_INCONSISTENT)
        self.assertEqual(out, "inconsistent\n")

        path = self.write("single.txt", "vars: 1\nx0\n")
        code, out, _ = self.run_cli("solvable", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "consistent\n")

    def test_solvable_check(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, _ = self.run_cli("solvable", path, "--check")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            out.splitlines(), ["consistent", "oracle: 1 Boolean solutions, agrees"]
        )
        code, out, _ = self.run_cli("solvable", path, "--check", "--json")
        document = json.loads(out)
        self.assertEqual(document["oracle"], {"solutions": [[1, 1, 1]], "agrees": True})

        path = self.write("contradiction.txt", "vars: 1\nx0\nx0 + 1\n")
        code, out, _ = self.run_cli("solvable", path, "--check")
        self.assertEqual(code, EXIT_INCONSISTENT)
        self.assertEqual(
            out.splitlines(),
            ["inconsistent", "oracle: skipped, field equations missing"],
        )

    def test_solvable_check_too_many_variables(self):
        field = "".join(f"x{i}^2 - x{i}\n" for i in range(21))
        path = self.write("wide.txt", "vars: 21\n" + field)
        code, out, _ = self.run_cli("solvable", path, "--check")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(
            out.splitlines(), ["consistent", "oracle: skipped, too many variables"]
        )

        text = "vars: 21\n" + field + "x0\nx0 + 1\n"
        path = self.write("wide_contradiction.txt", text)
        code, out, _ = self.run_cli("solvable", path, "--check", "--json")
        self.assertEqual(code, EXIT_INCONSISTENT)
        document = json.loads(out)
        self.assertEqual(document["verdict"], "inconsistent")
        self.assertIsNone(document["oracle"])

    def test_divide(self):
        path = self.write(
            "divide.txt", "vars: 2\nx0^2*x1 + x0*x1^2 + x1^2\nx0*x1 - 1\nx1^2 - 1\n"
        )
        code, out, _ = self.run_cli("divide", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["q0: x1 + x0", "q1: 1", "r: x1 + x0 + 1"])
        code, out, _ = self.run_cli("divide", path, "--json")
        self.assertEqual(
            json.loads(out), {"quotients": ["x1 + x0", "1"], "remainder": "x1 + x0 + 1"}
        )

        path = self.write("lonely.txt", "vars: 1\nx0\n")
        self.assertEqual(self.run_cli("divide", path)[0], EXIT_ERROR)

    def test_spoly(self):
        path = self.write("field.txt", "vars: 3\nx2^2 - x2\nx1^2 - x1\n")
        code, out, _ = self.run_cli("spoly", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, "x1*x2^2 - x1^2*x2\n")

        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, _ = self.run_cli("spoly", path, "--json")
        pairs = [item["pair"] for item in json.loads(out)]
        self.assertEqual(pairs, [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]])

    def test_leading_term(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, _ = self.run_cli("leading-term", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["4*x1*x2", "x2^2", "x1^2", "x0^2"])
        code, out, _ = self.run_cli("leading-term", path, "--order", "lex")
        self.assertEqual(out.splitlines()[0], "2*x0*x2")

        path = self.write("zero.txt", "vars: 1\n0\n")
        self.assertEqual(self.run_cli("leading-term", path)[0], EXIT_ERROR)

    def test_reduce(self):
        path = self.write("reduce.txt", "vars: 2\nx0^2*x1 + x0*x1\nx0^2*x1\n")
        code, out, _ = self.run_cli("reduce", path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.splitlines(), ["x0 + 1", "1"])
        code, out, _ = self.run_cli("reduce", path, "--mode", "off")
        self.assertEqual(out.splitlines(), ["x0^2*x1 + x0*x1", "x0^2*x1"])

    def test_trace(self):
        path = self.write("worked_example.txt", WORKED_EXAMPLE)
        code, out, err = self.run_cli("gb", path, "--profile", "paper", "--trace")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.splitlines()), 7)
        self.assertIn("pass 1: 6 S-polynomials", err)
        self.assertIn("s_polynomials", err)

    def test_errors(self):
        missing = os.path.join(self.tmpdir.name, "missing.txt")
        code, out, err = self.run_cli("gb", missing)
        self.assertEqual(code, EXIT_ERROR)
        self.assertEqual(out, "")
        self.assertIn("error:", err)

        path = self.write("bad.txt", "vars: 2\nx0 + 1\nx2\nx0 +\n")
        code, _, err = self.run_cli("gb", path)
        self.assertEqual(code, EXIT_ERROR)
        self.assertIn("line 3:", err)
        self.assertIn("line 4:", err)

    def test_usage(self):
        self.assertEqual(self.run_cli()[0], EXIT_ERROR)
        path = self.write("single.txt", "vars: 1\nx0\n")
        self.assertEqual(self.run_cli("gb", path, "--order", "grevlex")[0], EXIT_ERROR)
        self.assertEqual(self.run_cli("frobnicate", path)[0], EXIT_ERROR)
        code, out, _ = self.run_cli("--help")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("solvable", out)
