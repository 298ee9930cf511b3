import io
import json
import math

import pytest

from app.main import main


def run(*argv):
    """CLI 실행 -> (종료 코드, 표준 출력)"""
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


class TestCliSuccess:
    """종료 코드 0 경로"""

    def test_check_admissible(self, fixture_path):
        code, text = run("check", fixture_path("corpus", "admissible_system.json"))
        assert code == 0
        report = json.loads(text)
        assert report["satisfied"] and report["generic"]
        assert len(report["residuals"]) == 4

    def test_reduce(self, fixture_path):
        code, text = run("reduce", fixture_path("corpus", "admissible_system.json"))
        assert code == 0
        z = json.loads(text)["z"]
        assert z[0][0] == pytest.approx((1 - math.sqrt(3)) / 2)
        assert z[1][0] == pytest.approx((1 + math.sqrt(3)) / 2)

    def test_solve_at_zero_returns_x0(self, fixture_path):
        code, text = run("solve", fixture_path("corpus", "admissible_system.json"), "--t", "0")
        assert code == 0
        point = json.loads(text)
        assert point["x1"] == [0.1, 0.1]
        assert point["x2"] == [0.1, -0.05]

    def test_classify_isochronous(self, fixture_path):
        code, text = run("classify", fixture_path("isochronous.json"))
        assert code == 0
        report = json.loads(text)
        assert report["regime"] == "isochronous"
        assert report["period"] == pytest.approx(math.pi)
        assert report["rho"] == [1, 2]

    def test_forward(self, fixture_path):
        code, text = run("forward", fixture_path("isochronous.json"))
        assert code == 0
        c = json.loads(text)["c"]
        assert c[0][0] == pytest.approx([0.5, 0.0])
        assert c[1][5] == pytest.approx([-3.0, 0.0])

    def test_case51(self, fixture_path):
        code, text = run("case51", fixture_path("case51.json"), "--t", "0.5")
        assert code == 0
        result = json.loads(text)
        assert result["matched"] and not result["mirrored"]
        expected = math.tanh(math.atanh(0.2) - 0.5)
        assert result["point"]["x1"][0] == pytest.approx(expected, abs=1e-12)
        assert result["point"]["x1"][1] == pytest.approx(0.0, abs=1e-12)

    def test_sample_csv(self, fixture_path):
        path = fixture_path("corpus", "admissible_system.json")
        code, first = run("sample", path, "--t1", "0.5", "--steps", "10")
        assert code == 0
        lines = first.splitlines()
        assert lines[0] == "t,re_x1,im_x1,re_x2,im_x2"
        assert len(lines) == 12
        _, second = run("sample", path, "--t1", "0.5", "--steps", "10")
        assert first == second

    def test_sample_structured_reports_pole(self, fixture_path):
        code, text = run(
            "sample", fixture_path("corpus", "homogeneous_half.json"),
            "--t1", "1.5", "--steps", "15", "--x0=-0.5,0,1.5,0", "--format", "structured",
        )
        assert code == 0
        result = json.loads(text)
        assert len(result["points"]) == 15
        assert result["poles"][0]["t"] == pytest.approx(1.0)

    def test_roundtrip_corpus(self, corpus_files):
        code, text = run("roundtrip", *corpus_files)
        assert code == 0
        results = json.loads(text)
        assert [r["file"] for r in results] == corpus_files
        assert all(r["success"] for r in results)

    def test_verify_corpus(self, corpus_files):
        code, text = run("verify", *corpus_files, "--t1", "0.5")
        assert code == 0
        for r in json.loads(text):
            assert r["success"]
            assert r["sup_error"] <= 1e-6
            assert r["compared_points"] == 51


    def test_floats_use_17_significant_digits(self, fixture_path):
        """구조화 출력의 실수는 CSV 와 같은 17 유효숫자"""
        path = fixture_path("corpus", "admissible_system.json")
        code, text = run("solve", path, "--t", "0", "--x0=0.1,0,-0.3,0.2")
        assert code == 0
        assert "0.10000000000000001" in text
        assert "-0.29999999999999999" in text
        point = json.loads(text)
        assert point["x1"] == [0.1, 0]
        assert point["x2"] == [-0.3, 0.2]
        assert run("solve", path, "--t", "0", "--x0=0.1,0,-0.3,0.2")[1] == text


class TestCliFailures:
    """오류 코드 -> 종료 코드 매핑"""

    def test_malformed_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{\"c\": [[1, 2]", encoding="utf-8")
        assert run("check", str(path))[0] == 1

    def test_missing_file(self, tmp_path):
        assert run("check", str(tmp_path / "absent.json"))[0] == 1

    def test_unknown_option(self, fixture_path):
        assert run("check", fixture_path("violating.json"), "--bogus")[0] == 1

    def test_missing_subcommand(self):
        assert run()[0] == 1

    def test_bad_x0(self, fixture_path):
        assert run("solve", fixture_path("case51.json"), "--t", "0.1", "--x0", "1,2,3")[0] == 1

    def test_sample_descending_interval(self, fixture_path):
        code, _ = run("sample", fixture_path("corpus", "struct_real.json"), "--t1=-1", "--steps", "10")
        assert code == 1

    def test_constraint_violated(self, fixture_path):
        code, text = run("check", fixture_path("violating.json"))
        assert code == 2
        assert not json.loads(text)["satisfied"]

    def test_roundtrip_violated(self, fixture_path):
        code, text = run("roundtrip", fixture_path("violating.json"))
        assert code == 2
        assert json.loads(text)[0]["error"] == "CONSTRAINT_VIOLATED"

    def test_nongeneric(self, fixture_path):
        code, text = run("check", fixture_path("nongeneric.json"))
        assert code == 3
        assert "c21 == 0" in json.loads(text)["reasons"]

    def test_case51_nongeneric(self, fixture_path):
        code, text = run("case51", fixture_path("nongeneric.json"))
        assert code == 3
        assert not json.loads(text)["matched"]

    def test_pole_at_time(self, fixture_path):
        code, _ = run("solve", fixture_path("corpus", "homogeneous_half.json"), "--t", "1", "--x0=-0.5,0,1.5,0")
        assert code == 4

    def test_verification_failed(self, fixture_path):
        code, text = run("verify", fixture_path("corpus", "struct_real.json"), "--t1", "0.5", "--threshold", "1e-30")
        assert code == 5
        assert json.loads(text)[0]["error"] == "VERIFICATION_FAILED"

    def test_worst_code_wins(self, fixture_path):
        """여러 파일 중 가장 큰 종료 코드"""
        code, text = run(
            "roundtrip", fixture_path("corpus", "struct_real.json"), fixture_path("nongeneric.json"),
            fixture_path("violating.json"),
        )
        assert code == 3
        assert [r["success"] for r in json.loads(text)] == [True, False, False]
