import filecmp
import os
import subprocess
import sys

import pytest

from heapsize import _tokenize_py, tokenizer


def run(args, env_extra):
    env = dict(os.environ, **env_extra)
    return subprocess.run([sys.executable, "-m", "heapsize", *args], capture_output=True, text=True, env=env)


def test_env_var_forces_python_kernel():
    code = "import heapsize.tokenizer as t; print(t.KERNEL)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=dict(os.environ, HEAPSIZE_PURE_PYTHON="1"))
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(tokenizer.KERNEL != "cython", reason="compiled kernel not built")
def test_kernels_give_identical_pipeline_outputs(fixture_manifest, tmp_path):
    dirs = {}
    for name, env in (("compiled", {}), ("python", {"HEAPSIZE_PURE_PYTHON": "1"})):
        dirs[name] = tmp_path / name
        res = run(["analyze", "--manifest", fixture_manifest, "--seed", "3", "--unit", "line",
                   "--out", str(dirs[name]), "--emit-svg"], env)
        assert res.returncode == 0, res.stderr
    names = sorted(os.listdir(dirs["compiled"]))
    assert names == sorted(os.listdir(dirs["python"]))
    _, mismatch, errors = filecmp.cmpfiles(dirs["compiled"], dirs["python"], names, shallow=False)
    assert not mismatch and not errors


@pytest.mark.skipif(tokenizer.KERNEL != "cython", reason="compiled kernel not built")
def test_fixture_text_parity(fixture_manifest):
    root = os.path.dirname(fixture_manifest)
    from heapsize import _tokenize_cy

    for dirpath, _, files in os.walk(root):
        for f in files:
            if f.endswith(".txt"):
                with open(os.path.join(dirpath, f), encoding="utf-8") as fh:
                    text = fh.read()
                for strip in (True, False):
                    for keep in (True, False):
                        assert _tokenize_cy.split_forms(text, strip, keep) == _tokenize_py.split_forms(
                            text, strip, keep)
