from asreg.cli import main, verify_paper
from asreg.formats import data_path

ALG = str(data_path("as5-extremal.alg"))
CPLX = str(data_path("as5-extremal.cplx"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_complete(capsys):
    code, out, _ = run(capsys, "complete", ALG)
    assert code == 0
    rules = [l for l in out.splitlines() if " -> " in l]
    assert len(rules) == 4 and rules[0] == "x^2*y -> y*x^2"
    assert "confluent-upto 15 ambiguities 6" in out


def test_hilbert(capsys, tmp_path):
    tsv = tmp_path / "h.tsv"
    code, out, _ = run(capsys, "hilbert", ALG, "--tsv", str(tsv))
    assert code == 0
    assert "5\t17" in out
    assert out.rstrip().endswith("product-form: 1,1,2,3,5")
    assert tsv.read_text().splitlines()[:3] == ["0\t1", "1\t2", "2\t4"]


def test_hilbert_small_cap_inconclusive(capsys):
    code, out, _ = run(capsys, "hilbert", ALG, "--cap", "8")
    assert "product-form: none-within-cap" in out


def test_hilbert_bigraded(capsys):
    code, out, _ = run(capsys, "hilbert", ALG, "--cap", "12", "--bigraded")
    assert code == 0 and "1\t1\t2" in out.splitlines()


def test_order_flag(capsys):
    code, out, _ = run(capsys, "complete", ALG, "--order", "deglex:y>x", "--cap", "8")
    assert code == 0
    assert "y*x^2 -> x^2*y" in out.splitlines()
    assert "x^2*y -> y*x^2" not in out


def test_check_complex(capsys):
    code, out, _ = run(capsys, "check-complex", ALG, CPLX)
    assert code == 0
    assert "PASS\tcompose-zero" in out and "top-twist 12" in out


def test_check_complex_failure(capsys, tmp_path):
    bad = tmp_path / "bad.cplx"
    text = data_path("as5-extremal.cplx").read_text()
    assert text.endswith("entry 2 1 y\n")
    bad.write_text(text[:-len("y\n")] + "x\n")
    code, out, _ = run(capsys, "check-complex", ALG, str(bad))
    assert code == 1
    assert "FAIL\tcompose-zero\td4*d5 slot (1,1)" in out


def test_lie_commands(capsys):
    code, out, _ = run(capsys, "lie", "betti", "heisenberg")
    assert code == 0 and "2\t3\t2" in out
    code, out, _ = run(capsys, "lie", "pbw", str(data_path("case-f.lie")), "--cap", "4")
    assert "4\t12" in out
    code, out, _ = run(capsys, "lie", "delta", "case-f")
    assert code == 0 and "delta 0" in out
    code, out, _ = run(capsys, "lie", "ce", "case-f")
    assert code == 0 and "PASS\tce-right compose-zero" in out


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--nmax", "5", "--lmax", "12")
    assert code == 0
    rows = [l.split("\t") for l in out.splitlines() if l[:1].isdigit()]
    assert rows[2] == ["3", "3,4,7", "12", "3", "known"]
    assert rows[3][-1] == "open"


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.alg"
    bad.write_text("gens x:1 y:1\nrel x + y^2\n")
    code, _, err = run(capsys, "complete", str(bad), "--cap", "4")
    assert code == 2 and "bad.alg:2:5" in err
    code, _, err = run(capsys, "complete", str(tmp_path / "missing.alg"))
    assert code == 2
    code, _, _ = run(capsys, "lie", "betti", "nonsense")
    assert code == 2
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    nocap = tmp_path / "nocap.alg"
    nocap.write_text("gens x:1 y:1\n")
    code, _, err = run(capsys, "complete", str(nocap))
    assert code == 2 and "cap" in err


def test_verify_paper_passes(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert "0 FAIL" in out
    assert "# input as5-extremal.alg sha256:" in out


def test_verify_paper_corrupt_d5():
    report = verify_paper("d5")
    assert report.exit_code == 1
    names = [n for n, ok, _ in report.failures]
    assert "3 resolution compose-zero" in names
    detail = dict((n, d) for n, _, d in report.failures)["3 resolution compose-zero"]
    assert detail.startswith("d4*d5 slot (1,1)")


def test_verify_paper_drop_r_term():
    report = verify_paper("drop-r-term")
    assert report.exit_code == 1
    details = {n: d for n, _, d in report.failures}
    assert details["2 hilbert: 1/((1-t)^2(1-t^2)(1-t^3)(1-t^5)) to degree 15"] == \
        "first mismatch at degree 9: 63 vs 64"
