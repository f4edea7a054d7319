"""Course-pair aggregation: common-student counts for every qualifying pair.

Pairs are unordered, canonically ordered by course key, and never pair a
course with itself. Counts are exact distinct-student intersections; a
pair-level inclusion floor (default 20) keeps the dataset at the size the
rest of the pipeline expects.
"""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping

from .errors import DatasetInconsistencyError
from .ingest import CourseKey, CourseSummary, EnrollmentRecord, _checked_reader, course_key

DEFAULT_PAIR_FLOOR = 20

PAIR_FIELDS = (
    "dept1",
    "number1",
    "title1",
    "students1",
    "dept2",
    "number2",
    "title2",
    "students2",
    "common_students",
)


@dataclass(frozen=True, slots=True)
class CoursePair:
    """Two distinct courses plus their count of common students.

    course1 < course2 under the canonical course-key ordering.
    """

    course1: CourseKey
    course2: CourseKey
    common_students: int


@dataclass(frozen=True, slots=True)
class PairDataset:
    """The course-pair dataset plus the summaries it was built against."""

    pairs: tuple[CoursePair, ...]
    summaries: Mapping[CourseKey, CourseSummary]
    floor_applied: int


def build_pairs(
    records: Iterable[EnrollmentRecord],
    summaries: Mapping[CourseKey, CourseSummary],
    floor: int = DEFAULT_PAIR_FLOOR,
) -> PairDataset:
    """Count common students for every unordered course pair, keep counts >= floor.

    Counting goes student by student: each student's distinct course set
    contributes one increment per unordered pair of their courses, so
    retakes and multi-section enrollments collapse naturally.
    """
    if floor < 1:
        raise ValueError(f"pair floor must be >= 1, got {floor}")
    # count over small integer ids; CourseKey hashing is too slow for the
    # hot loop at full scale
    ids: dict[CourseKey, int] = {}
    by_student: dict[str, set[int]] = {}
    for record in records:
        key = course_key(record)
        course_id = ids.setdefault(key, len(ids))
        by_student.setdefault(record.student_id, set()).add(course_id)

    n = len(ids)
    counts: Counter[int] = Counter()
    for courses in by_student.values():
        if len(courses) < 2:
            continue
        ordered = sorted(courses)
        counts.update([a * n + b for a, b in combinations(ordered, 2)])

    keys_by_id = {course_id: key for key, course_id in ids.items()}
    pairs = []
    for code, count in counts.items():
        if count < floor:
            continue
        first, second = sorted((keys_by_id[code // n], keys_by_id[code % n]))
        pairs.append(CoursePair(course1=first, course2=second, common_students=count))
    pairs.sort(key=lambda p: (p.course1, p.course2))
    return PairDataset(pairs=tuple(pairs), summaries=dict(summaries), floor_applied=floor)


def co_occurrence_rate(pair: CoursePair, summaries: Mapping[CourseKey, CourseSummary]) -> float:
    """Common students divided by the larger course's student total; in (0, 1]."""
    try:
        total1 = summaries[pair.course1].total_students
        total2 = summaries[pair.course2].total_students
    except KeyError as missing:
        raise DatasetInconsistencyError(f"course not present in summaries: {missing.args[0]}") from None
    return pair.common_students / max(total1, total2)


def write_pairs(data: PairDataset, path: str | Path) -> None:
    """Write the pair CSV, rows sorted by canonical pair key."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PAIR_FIELDS)
        for pair in sorted(data.pairs, key=lambda p: (p.course1, p.course2)):
            s1 = data.summaries[pair.course1]
            s2 = data.summaries[pair.course2]
            writer.writerow(
                (
                    pair.course1.department,
                    pair.course1.course_number,
                    s1.title,
                    s1.total_students,
                    pair.course2.department,
                    pair.course2.course_number,
                    s2.title,
                    s2.total_students,
                    pair.common_students,
                )
            )


def read_pairs(
    path: str | Path,
    summaries: Mapping[CourseKey, CourseSummary] | None = None,
    floor_applied: int = 1,
) -> PairDataset:
    """Read a pair CSV back into a PairDataset.

    The file format does not carry the construction floor, so callers that
    know it should pass floor_applied; 1 is always a valid lower bound.
    When no summaries are supplied they are reconstructed from the per-row
    course totals (courses that never formed a pair are then absent).
    """
    merged: dict[CourseKey, CourseSummary] = dict(summaries) if summaries else {}
    pairs: list[CoursePair] = []
    with open(path, encoding="utf-8", newline="") as handle:
        for row in _checked_reader(handle, PAIR_FIELDS, str(path)):
            key1 = CourseKey(row[0].strip(), row[1].strip())
            key2 = CourseKey(row[4].strip(), row[5].strip())
            if key1 not in merged:
                merged[key1] = CourseSummary(key=key1, title=row[2], total_students=int(row[3]))
            if key2 not in merged:
                merged[key2] = CourseSummary(key=key2, title=row[6], total_students=int(row[7]))
            pairs.append(CoursePair(course1=key1, course2=key2, common_students=int(row[8])))
    pairs.sort(key=lambda p: (p.course1, p.course2))
    return PairDataset(pairs=tuple(pairs), summaries=merged, floor_applied=floor_applied)
