import json
import os
import subprocess

import pytest

CLI = os.environ.get("ORDERDRAW_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="ORDERDRAW_CLI is not set")

S3 = "a1 < b2\na1 < b3\na2 < b1\na2 < b3\na3 < b1\na3 < b2\n"


def run(*args, stdin=None):
    return subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True)


def test_draw_s3_json(tmp_path):
    src = tmp_path / "s3.order"
    src.write_text(S3)
    r = run("draw", "-i", str(src), "-f", "json")
    assert r.returncode == 0, r.stderr
    drawing = json.loads(r.stdout)
    assert len(drawing["elements"]) == 6
    assert len(drawing["extension"]) == 1
    assert "|C|=1" in r.stderr


def test_svg_to_file(tmp_path):
    src = tmp_path / "s3.order"
    src.write_text(S3)
    out = tmp_path / "s3.svg"
    r = run("draw", "-i", str(src), "-o", str(out))
    assert r.returncode == 0
    assert out.read_text().lstrip().startswith("<")
    assert "passes=1" in r.stdout


def test_dim_and_tig(tmp_path):
    src = tmp_path / "s3.order"
    src.write_text(S3)
    assert run("dim", "-i", str(src)).stdout == "dim<=2: no\n"
    assert "vertices=18 edges=24" in run("tig", "-i", str(src)).stderr


def test_parse_error_exit_code(tmp_path):
    src = tmp_path / "bad.order"
    src.write_text("a < b\nb <\n")
    r = run("draw", "-i", str(src))
    assert r.returncode == 1
    assert "line 2" in r.stderr
