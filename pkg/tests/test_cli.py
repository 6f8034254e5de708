from prymrep.cli import main
from prymrep.ringlinalg import parse_matrix
from prymrep.wordlang import evaluate, parse


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval_scalar(capsys):
    code, out, _ = run(capsys, "eval", "--d", "5", "--g", "2", "--word", "T")
    assert code == 0
    assert out == "z, 0 ; 0, z\n"


def test_eval_g1(capsys):
    code, out, _ = run(capsys, "eval", "--d", "5", "--g", "2", "--word", "G1(1)")
    assert code == 0
    assert out == "1, 1 ; 0, 1\n"


def test_eval_inverse_word(capsys):
    code, out, _ = run(capsys, "eval", "--d", "4", "--g", "3",
                       "--word", "TH(2)^-1")
    assert code == 0
    m = parse_matrix(out.strip(), 4)
    assert m == evaluate(parse("TH(2)"), 4, 3).mat.inverse()


def test_eval_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--d", "5", "--g", "2", "--word", "Q(1)")
    assert code == 2
    assert "unknown generator" in err


def test_eval_range_error_exit_2(capsys):
    code, _, err = run(capsys, "eval", "--d", "5", "--g", "2", "--word", "Ti(2; 1)")
    assert code == 2
    assert "out of range" in err


def test_check_member(capsys):
    code, out, _ = run(capsys, "check", "--d", "5", "--g", "2",
                       "--matrix", "1, 0 ; 0, 1", "--group", "Lambda")
    assert code == 0
    assert "member of Lambda" in out


def test_check_nonmember_reason(capsys):
    code, out, _ = run(capsys, "check", "--d", "5", "--g", "2",
                       "--matrix", "1, 0 ; 1, 1", "--group", "Lambda")
    assert code == 1
    assert "lower-left" in out


def test_check_remark_matrix(capsys):
    mat = "-1+2*z+2*z^4, 0 ; 0, 3+2*z+2*z^4"
    code, out, _ = run(capsys, "check", "--d", "5", "--g", "2",
                       "--matrix", mat, "--group", "UrUSharp")
    assert code == 0
    code, out, _ = run(capsys, "check", "--d", "5", "--g", "2",
                       "--matrix", mat, "--group", "Lambda")
    assert code == 1
    assert "det(D)" in out


def test_check_dimension_mismatch_exit_2(capsys):
    code, _, err = run(capsys, "check", "--d", "5", "--g", "3",
                       "--matrix", "1, 0 ; 0, 1", "--group", "U")
    assert code == 2
    assert "expected" in err


def test_decompose_delta_round_trip(capsys):
    b_text = "2, z ; z^4, 1+z+z^4"
    code, out, _ = run(capsys, "decompose-delta", "--d", "5", "--g", "3",
                       "--B", b_text)
    assert code == 0
    word = parse(out.strip())
    b = parse_matrix(b_text, 5)
    m = evaluate(word, 5, 3)
    assert m.upper_right() == b


def test_decompose_delta_rejects_bad_block(capsys):
    code, _, err = run(capsys, "decompose-delta", "--d", "5", "--g", "3",
                       "--B", "0, 1 ; 0, 0")
    assert code == 2
    assert "self-adjoint" in err


def test_reduce_lambda(capsys):
    code, out, _ = run(capsys, "reduce-lambda", "--d", "5", "--g", "2",
                       "--matrix", "z, 3*z ; 0, z", "--word", "T")
    assert code == 0
    word = parse(out.strip())
    assert evaluate(word, 5, 2).to_text() == "z, 3*z ; 0, z"


def test_fox(capsys):
    code, out, _ = run(capsys, "fox", "--d", "3", "--g", "2",
                       "--map", "x1 -> x2 x1 x2^-1 ; x2 -> x2",
                       "--inverse", "x1 -> x2^-1 x1 x2 ; x2 -> x2")
    assert code == 0
    assert out == "z\n"


def test_fox_nonmember_exit_1(capsys):
    code, out, _ = run(capsys, "fox", "--d", "3", "--g", "2",
                       "--map", "x1 -> x1 x2 ; x2 -> x2",
                       "--inverse", "x1 -> x1 x2^-1 ; x2 -> x2")
    assert code == 1
    assert "exponent" in out


def test_selftest_small(capsys):
    code, out, _ = run(capsys, "selftest", "--max-d", "3", "--max-g", "2",
                       "--seed", "1")
    assert code == 0
    assert "all suites passed" in out
    assert out.count("PASS") >= 9


def test_selftest_injected_failure(capsys):
    code, out, _ = run(capsys, "selftest", "--max-d", "2", "--max-g", "2",
                       "--inject-failure")
    assert code == 1
    assert "FAIL injected-failure" in out


def test_usage_error_exit_2():
    import pytest
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--d", "5"])  # missing --g and --word
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--d", "5", "--g", "2", "--matrix", "1, 0 ; 0, 1",
              "--group", "NoSuchGroup"])
    assert exc.value.code == 2


def test_d_and_g_bounds(capsys):
    code, _, err = run(capsys, "eval", "--d", "1", "--g", "2", "--word", "T")
    assert code == 2 and ">= 2" in err
    code, _, err = run(capsys, "eval", "--d", "5", "--g", "1", "--word", "T")
    assert code == 2 and ">= 2" in err


def test_selftest_deterministic(capsys):
    code1, out1, _ = run(capsys, "selftest", "--max-d", "3", "--max-g", "3",
                         "--seed", "7")
    code2, out2, _ = run(capsys, "selftest", "--max-d", "3", "--max-g", "3",
                         "--seed", "7")
    assert (code1, out1) == (code2, out2)
