"""Generator configs shared by the synth tests and the acceptance suite.

The hub-shift config separates the two hub mechanisms cleanly at desk
scale: three sole-option humanities cores are taken by everyone, while
three STEM departments run ten-course required sequences taken only by
their majors (~40 students each). Every other course stays well below the
dynamic bar k * students, so dynamic thresholding strips the cores down
to core-core edges while sequence edges are untouched.
"""

from __future__ import annotations

from coursenet.synth import CoreCourseSpec, DepartmentSpec, SynthConfig

HUB_SHIFT_STATIC_THRESHOLD = 20
HUB_SHIFT_K = 0.03
HUB_SHIFT_FLOOR = 20

_HUB_DEPARTMENTS = (
    DepartmentSpec("Philosophy", "Humanities", 40, 0),
    DepartmentSpec("Literature", "Humanities", 40, 0),
    DepartmentSpec("History", "Humanities", 40, 0),
    DepartmentSpec("Sociology", "Social Sciences", 30, 0),
    DepartmentSpec("Economics", "Social Sciences", 30, 0),
    DepartmentSpec("Communication", "Communication and Media Studies", 25, 0),
    DepartmentSpec("Music", "Arts", 25, 0),
    DepartmentSpec("French", "Modern Languages", 20, 0),
    DepartmentSpec("Biology", "STEM", 12, 10),
    DepartmentSpec("Chemistry", "STEM", 12, 10),
    DepartmentSpec("Mathematics", "STEM", 12, 10),
)

_HUB_CORES = (
    CoreCourseSpec("Philosophy", "sole-option", 1.0),
    CoreCourseSpec("Literature", "sole-option", 1.0),
    CoreCourseSpec("History", "sole-option", 1.0),
    CoreCourseSpec("Philosophy", "one-of-n", 0.25),
    CoreCourseSpec("History", "one-of-n", 0.25),
)

_HUB_MAJORS = (
    ("Philosophy", 40.0),
    ("Literature", 40.0),
    ("History", 40.0),
    ("Sociology", 30.0),
    ("Economics", 30.0),
    ("Communication", 20.0),
    ("Music", 15.0),
    ("French", 15.0),
    ("Biology", 4.0),
    ("Chemistry", 4.0),
    ("Mathematics", 4.0),
)

SOLE_CORE_TITLES = ("Philosophy Core 1", "Literature Core 2", "History Core 3")


def hub_shift_config(seed: int, students: int = 2500) -> SynthConfig:
    return SynthConfig(
        seed=seed,
        students=students,
        departments=_HUB_DEPARTMENTS,
        core_courses=_HUB_CORES,
        majors=_HUB_MAJORS,
        electives_min=2,
        electives_max=5,
    )


def scale_config(seed: int = 11, students: int = 25_000) -> SynthConfig:
    """Production-scale shape: ~1800 courses, ~18 courses per student."""
    departments = []
    majors = []
    categories = (
        "Arts",
        "Communication and Media Studies",
        "Humanities",
        "Modern Languages",
        "Social Sciences",
        "STEM",
    )
    for i in range(60):
        category = categories[i % len(categories)]
        required = 5 if category == "STEM" else 0
        departments.append(DepartmentSpec(f"Dept{i:02d}", category, 29, required))
        majors.append((f"Dept{i:02d}", 3.0 if category == "STEM" else 1.0))
    cores = tuple(
        CoreCourseSpec(f"Dept{i:02d}", "sole-option", 1.0) for i in (2, 8, 14, 20, 26)
    ) + tuple(
        CoreCourseSpec(f"Dept{(7 * j) % 60:02d}", "one-of-n", 0.5) for j in range(10)
    )
    return SynthConfig(
        seed=seed,
        students=students,
        departments=tuple(departments),
        core_courses=cores,
        majors=tuple(majors),
        electives_min=4,
        electives_max=8,
    )
