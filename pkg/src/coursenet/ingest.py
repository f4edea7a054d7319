"""Enrollment record parsing and aggregation into distinct courses.

The input is a line-oriented CSV of individual enrollments (one row per
student per course section). Parsing collapses nothing; aggregation
resolves the rows into distinct courses with distinct-student counts,
which is the unit everything downstream works with.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .errors import InputFormatError

ENROLLMENT_FIELDS = (
    "student_id",
    "course_title",
    "department",
    "course_number",
    "section",
    "semester",
    "final_grade",
)

COURSE_FIELDS = ("department", "course_number", "title", "total_students")

# Required to be non-empty after trimming; section and final_grade may be blank.
_REQUIRED = ("student_id", "course_title", "department", "course_number", "semester")


@dataclass(frozen=True, slots=True)
class EnrollmentRecord:
    """One student's enrollment in one course section (a raw input row)."""

    student_id: str
    course_title: str
    department: str
    course_number: str
    section: str
    semester: str
    final_grade: float | None = None


@dataclass(frozen=True, order=True, slots=True)
class CourseKey:
    """Canonical course identity: (department, course_number).

    Ordering is lexicographic on department then course_number, which is
    what pair canonicalization relies on. Titles are display labels only.
    """

    department: str
    course_number: str


@dataclass(frozen=True, slots=True)
class CourseSummary:
    """A distinct course with its distinct-student count across all sections."""

    key: CourseKey
    title: str
    total_students: int


@dataclass(slots=True)
class ParseReport:
    """Outcome of a parse: accepted row count plus skipped rows with reasons."""

    accepted: int = 0
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def skipped_count(self) -> int:
        return len(self.skipped)


def parse_enrollments(source: Iterable[str]) -> tuple[list[EnrollmentRecord], ParseReport]:
    """Parse an enrollment CSV stream into records, input order preserved.

    The first row must be exactly the documented seven-field header.
    Malformed data rows (wrong arity, empty required field, unparseable
    grade) are skipped and reported, not fatal. Returns the records and a
    report whose skip entries are (1-based data row number, reason).
    """
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise InputFormatError("empty input: expected an enrollment header row") from None
    if tuple(h.strip() for h in header) != ENROLLMENT_FIELDS:
        raise InputFormatError(
            "unexpected enrollment header: expected "
            + ",".join(ENROLLMENT_FIELDS)
            + ", got "
            + ",".join(header)
        )

    records: list[EnrollmentRecord] = []
    report = ParseReport()
    row_no = 0
    for row in reader:
        if not row:
            continue  # blank line, not a data row
        row_no += 1
        if len(row) != len(ENROLLMENT_FIELDS):
            report.skipped.append((row_no, f"expected {len(ENROLLMENT_FIELDS)} fields, got {len(row)}"))
            continue
        student_id, title, department, number, section, semester, grade_text = (
            cell.strip() for cell in row
        )
        if not (student_id and title and department and number and semester):
            found = dict(zip(ENROLLMENT_FIELDS, (student_id, title, department, number, section, semester, grade_text)))
            empty = [name for name in _REQUIRED if not found[name]]
            report.skipped.append((row_no, "empty required field: " + ", ".join(empty)))
            continue
        grade: float | None = None
        if grade_text:
            try:
                grade = float(grade_text)
            except ValueError:
                report.skipped.append((row_no, f"unparseable final_grade: {grade_text!r}"))
                continue
            if not math.isfinite(grade) or grade < 0:
                report.skipped.append((row_no, f"final_grade out of range: {grade_text!r}"))
                continue
        records.append(
            EnrollmentRecord(
                student_id=student_id,
                course_title=title,
                department=department,
                course_number=number,
                section=section,
                semester=semester,
                final_grade=grade,
            )
        )
        report.accepted += 1
    return records, report


def parse_enrollment_file(path: str | Path) -> tuple[list[EnrollmentRecord], ParseReport]:
    with open(path, encoding="utf-8", newline="") as handle:
        return parse_enrollments(handle)


def course_key(record: EnrollmentRecord) -> CourseKey:
    return CourseKey(record.department, record.course_number)


def summarize_courses(records: Iterable[EnrollmentRecord]) -> dict[CourseKey, CourseSummary]:
    """Resolve records into one summary per distinct course.

    total_students counts each student at most once per course regardless
    of sections or retakes; the title is taken from the first record seen.
    """
    students: dict[CourseKey, set[str]] = {}
    titles: dict[CourseKey, str] = {}
    for record in records:
        key = course_key(record)
        seen = students.get(key)
        if seen is None:
            students[key] = {record.student_id}
            titles[key] = record.course_title
        else:
            seen.add(record.student_id)
    return {
        key: CourseSummary(key=key, title=titles[key], total_students=len(seen))
        for key, seen in sorted(students.items())
    }


def write_enrollments(records: Iterable[EnrollmentRecord], path: str | Path) -> None:
    """Write records in the enrollment CSV schema (grade blank when absent)."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(ENROLLMENT_FIELDS)
        for r in records:
            grade = "" if r.final_grade is None else format(r.final_grade, "g")
            writer.writerow(
                (r.student_id, r.course_title, r.department, r.course_number, r.section, r.semester, grade)
            )


def write_course_summaries(summaries: dict[CourseKey, CourseSummary], path: str | Path) -> None:
    """Write the course summary CSV, sorted by course key."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(COURSE_FIELDS)
        for key in sorted(summaries):
            s = summaries[key]
            writer.writerow((key.department, key.course_number, s.title, s.total_students))


def read_course_summaries(path: str | Path) -> dict[CourseKey, CourseSummary]:
    with open(path, encoding="utf-8", newline="") as handle:
        return _read_summaries(handle, str(path))


def _read_summaries(source: Iterable[str], label: str) -> dict[CourseKey, CourseSummary]:
    reader = _checked_reader(source, COURSE_FIELDS, label)
    summaries: dict[CourseKey, CourseSummary] = {}
    for row in reader:
        key = CourseKey(row[0].strip(), row[1].strip())
        summaries[key] = CourseSummary(key=key, title=row[2], total_students=int(row[3]))
    return summaries


def _checked_reader(source: Iterable[str], fields: tuple[str, ...], label: str) -> Iterator[list[str]]:
    """Yield data rows of a CSV stream after validating its header."""
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise InputFormatError(f"{label}: empty file, expected header {','.join(fields)}") from None
    if tuple(h.strip() for h in header) != fields:
        raise InputFormatError(f"{label}: expected header {','.join(fields)}, got {','.join(header)}")
    for row in reader:
        if row:
            yield row
