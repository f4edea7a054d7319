from __future__ import annotations

import io
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coursenet.errors import InputFormatError
from coursenet.ingest import (
    ENROLLMENT_FIELDS,
    CourseKey,
    EnrollmentRecord,
    parse_enrollments,
    read_course_summaries,
    summarize_courses,
    write_course_summaries,
    write_enrollments,
)

HEADER = ",".join(ENROLLMENT_FIELDS)


def parse(text: str):
    return parse_enrollments(io.StringIO(text))


def test_parse_sample_record() -> None:
    records, report = parse(HEADER + "\nS01,Computer Science I,Computer Science,1600,1,Fall2016,4.0\n")
    assert report.accepted == 1
    assert report.skipped_count == 0
    (record,) = records
    assert record.student_id == "S01"
    assert record.course_title == "Computer Science I"
    assert record.department == "Computer Science"
    assert record.course_number == "1600"
    assert record.section == "1"
    assert record.semester == "Fall2016"
    assert record.final_grade == 4.0


def test_parse_empty_stream_after_header() -> None:
    records, report = parse(HEADER + "\n")
    assert records == []
    assert report.accepted == 0
    assert report.skipped_count == 0


def test_parse_skips_empty_student_id() -> None:
    records, report = parse(HEADER + "\n,Algebra,Math,1000,1,Fall2016,\n")
    assert records == []
    assert report.skipped_count == 1
    assert "student_id" in report.skipped[0][1]


def test_parse_skips_wrong_arity_and_keeps_going() -> None:
    text = HEADER + "\nS01,Algebra,Math\nS02,Algebra,Math,1000,1,Fall2016,3.0\n"
    records, report = parse(text)
    assert [r.student_id for r in records] == ["S02"]
    assert report.skipped == [(1, "expected 7 fields, got 3")]


@pytest.mark.parametrize("grade", ["abc", "-1", "inf", "nan"])
def test_parse_skips_bad_grades(grade: str) -> None:
    records, report = parse(HEADER + f"\nS01,Algebra,Math,1000,1,Fall2016,{grade}\n")
    assert records == []
    assert report.skipped_count == 1


def test_parse_blank_grade_is_none() -> None:
    records, _ = parse(HEADER + "\nS01,Algebra,Math,1000,1,Fall2016,\n")
    assert records[0].final_grade is None


def test_parse_quoted_fields() -> None:
    text = HEADER + '\nS01,"Law, Order, and Society",Sociology,2000,1,Fall2016,\n'
    records, _ = parse(text)
    assert records[0].course_title == "Law, Order, and Society"


def test_parse_trims_whitespace() -> None:
    records, _ = parse(HEADER + "\n S01 , Algebra , Math , 1000 ,1,Fall2016,3.5\n")
    assert records[0].student_id == "S01"
    assert records[0].department == "Math"


def test_parse_rejects_bad_header() -> None:
    with pytest.raises(InputFormatError):
        parse("id,title\nS01,Algebra\n")


def test_parse_rejects_empty_input() -> None:
    with pytest.raises(InputFormatError):
        parse("")


def _record(student: str, dept: str, number: str, section: str = "1", title: str | None = None) -> EnrollmentRecord:
    return EnrollmentRecord(
        student_id=student,
        course_title=title or f"{dept} {number}",
        department=dept,
        course_number=number,
        section=section,
        semester="Fall2016",
    )


def test_summarize_collapses_sections_and_retakes() -> None:
    records = [
        _record("S01", "Math", "1000", section="1"),
        _record("S01", "Math", "1000", section="2"),
        _record("S02", "Math", "1000"),
    ]
    summaries = summarize_courses(records)
    assert summaries[CourseKey("Math", "1000")].total_students == 2


def test_summarize_three_records_two_students_one_course() -> None:
    records = [
        _record("S01", "Math", "1000"),
        _record("S02", "Math", "1000"),
        _record("S01", "Math", "1000", section="2"),
    ]
    summaries = summarize_courses(records)
    assert len(summaries) == 1
    assert summaries[CourseKey("Math", "1000")].total_students == 2


def test_summarize_title_from_first_record() -> None:
    records = [
        _record("S01", "Math", "1000", title="Calculus"),
        _record("S02", "Math", "1000", title="Calculus (renamed)"),
    ]
    summaries = summarize_courses(records)
    assert summaries[CourseKey("Math", "1000")].title == "Calculus"


def test_summarize_same_number_differs_by_department() -> None:
    records = [_record("S01", "Math", "1000"), _record("S01", "Physics", "1000")]
    assert len(summarize_courses(records)) == 2


def test_summarize_against_brute_force_recount() -> None:
    """25k-row synthetic stream: totals must equal a direct per-course
    distinct-count over the raw rows."""
    rng = random.Random(424242)
    records = [
        _record(f"S{rng.randrange(800):03d}", f"Dept{rng.randrange(12)}", str(1000 + rng.randrange(40)))
        for _ in range(25_000)
    ]
    summaries = summarize_courses(records)

    expected: dict[CourseKey, set[str]] = {}
    for r in records:
        expected.setdefault(CourseKey(r.department, r.course_number), set()).add(r.student_id)
    assert set(summaries) == set(expected)
    for key, students in expected.items():
        assert summaries[key].total_students == len(students)
    # grouping covers every accepted row
    per_course_rows: dict[CourseKey, int] = {}
    for r in records:
        key = CourseKey(r.department, r.course_number)
        per_course_rows[key] = per_course_rows.get(key, 0) + 1
    assert sum(per_course_rows.values()) == len(records)


@given(st.permutations(list(range(12))))
def test_summarize_is_permutation_invariant(order: list[int]) -> None:
    base = [
        _record(f"S{i % 5}", f"Dept{i % 3}", str(1000 + (i % 4)), section=str(i))
        for i in range(12)
    ]
    shuffled = [base[i] for i in order]
    assert summarize_courses(shuffled) == summarize_courses(base)


def test_enrollment_roundtrip(tmp_path) -> None:
    records = [
        _record("S01", "Math", "1000"),
        EnrollmentRecord("S02", 'He said "hi"', "English, dept", "20", "1", "Spring2017", 3.5),
    ]
    path = tmp_path / "enrollments.csv"
    write_enrollments(records, path)
    parsed, report = parse_enrollments(path.read_text().splitlines())
    assert report.skipped_count == 0
    assert parsed == records


def test_course_summary_roundtrip(tmp_path) -> None:
    records = [_record("S01", "Math", "1000"), _record("S02", "Art", "10")]
    summaries = summarize_courses(records)
    path = tmp_path / "courses.csv"
    write_course_summaries(summaries, path)
    assert read_course_summaries(path) == summaries
