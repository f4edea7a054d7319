"""Seeded synthetic enrollment generator.

Models the two enrollment mechanisms the pipeline is meant to separate:
universally required core courses (popular with everyone, so they pick up
edges by sheer volume) and per-major required sequences (taken together by
the same students, so they co-occur proportionally). Regular courses that
are neither core nor required form the shared elective pool.

Randomness comes from one random.Random instance seeded from the config
(CPython's Mersenne Twister, stable across platforms and versions since
3.2), so a fixed seed reproduces the dataset byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from random import Random

from .analysis import CategoryMap
from .errors import ConfigError
from .ingest import EnrollmentRecord

SEMESTERS = tuple(f"{season}{year}" for year in range(2016, 2020) for season in ("Fall", "Spring"))

_GRADE_PROBABILITY = 0.9
_RETAKE_PROBABILITY = 0.02

SOLE_OPTION = "sole-option"
ONE_OF_N = "one-of-n"


@dataclass(frozen=True, slots=True)
class DepartmentSpec:
    """A department: how many courses it offers and how many of them every
    one of its majors must take (the required sequence)."""

    name: str
    category: str
    course_count: int
    required_course_count: int


@dataclass(frozen=True, slots=True)
class CoreCourseSpec:
    """A core-curriculum course hosted by a department.

    sole-option cores are taken by every student (the probability is
    ignored); one-of-n cores are taken independently with take_probability,
    modeling requirements satisfiable by any of several courses.
    """

    department: str
    uniqueness: str
    take_probability: float


@dataclass(frozen=True, slots=True)
class SynthConfig:
    seed: int
    students: int
    departments: tuple[DepartmentSpec, ...]
    core_courses: tuple[CoreCourseSpec, ...]
    majors: tuple[tuple[str, float], ...]
    electives_min: int
    electives_max: int


@dataclass(frozen=True, slots=True)
class _Course:
    department: str
    number: str
    title: str


def validate_config(config: SynthConfig) -> None:
    if config.students < 0:
        raise ConfigError(f"students must be >= 0, got {config.students}")
    if not config.departments:
        raise ConfigError("at least one department is required")
    names = [d.name for d in config.departments]
    if len(set(names)) != len(names):
        raise ConfigError("duplicate department name in config")
    known = set(names)
    for dept in config.departments:
        if dept.course_count < 0 or dept.required_course_count < 0:
            raise ConfigError(f"negative course count for department {dept.name!r}")
        if dept.required_course_count > dept.course_count:
            raise ConfigError(
                f"infeasible config: department {dept.name!r} requires "
                f"{dept.required_course_count} courses but offers {dept.course_count}"
            )
    for core in config.core_courses:
        if core.department not in known:
            raise ConfigError(f"core course references unknown department {core.department!r}")
        if core.uniqueness not in (SOLE_OPTION, ONE_OF_N):
            raise ConfigError(f"core uniqueness must be {SOLE_OPTION} or {ONE_OF_N}, got {core.uniqueness!r}")
        if not 0.0 <= core.take_probability <= 1.0:
            raise ConfigError(f"take probability must be in [0, 1], got {core.take_probability}")
    if not config.majors:
        raise ConfigError("at least one major is required")
    for dept, weight in config.majors:
        if dept not in known:
            raise ConfigError(f"major references unknown department {dept!r}")
        if weight <= 0:
            raise ConfigError(f"major weight must be > 0, got {weight} for {dept!r}")
    if config.electives_min < 0 or config.electives_max < config.electives_min:
        raise ConfigError(
            f"elective range invalid: [{config.electives_min}, {config.electives_max}]"
        )


def _catalog(config: SynthConfig) -> tuple[list[_Course], list[_Course], dict[str, list[_Course]], list[_Course]]:
    """Build the course catalog: sole cores, one-of-n cores, per-department
    required sequences, and the shared elective pool (everything else)."""
    sole: list[_Course] = []
    optional: list[_Course] = []
    required: dict[str, list[_Course]] = {}
    electives: list[_Course] = []
    for dept in config.departments:
        courses = [
            _Course(dept.name, str(1000 + 10 * i), f"{dept.name} Course {i + 1}")
            for i in range(dept.course_count)
        ]
        required[dept.name] = courses[: dept.required_course_count]
        electives.extend(courses[dept.required_course_count :])
    for idx, core in enumerate(config.core_courses, start=1):
        course = _Course(core.department, str(9000 + idx), f"{core.department} Core {idx}")
        (sole if core.uniqueness == SOLE_OPTION else optional).append(course)
    return sole, optional, required, electives


def generate(config: SynthConfig) -> list[EnrollmentRecord]:
    """Generate enrollment records; deterministic for a fixed seed.

    Each student takes every sole-option core, samples the one-of-n cores,
    takes their major's required sequence, and draws electives without
    replacement from the shared pool.
    """
    validate_config(config)
    sole, optional, required, electives = _catalog(config)
    if config.electives_max > len(electives):
        raise ConfigError(
            f"infeasible config: up to {config.electives_max} electives requested "
            f"but the elective pool has {len(electives)} courses"
        )
    rng = Random(config.seed)
    major_depts = [dept for dept, _ in config.majors]
    major_weights = [weight for _, weight in config.majors]
    optional_specs = [c for c in config.core_courses if c.uniqueness == ONE_OF_N]

    records: list[EnrollmentRecord] = []
    for s in range(config.students):
        student_id = f"S{s + 1:05d}"
        taken: list[_Course] = list(sole)
        for spec, course in zip(optional_specs, optional):
            if rng.random() < spec.take_probability:
                taken.append(course)
        major = rng.choices(major_depts, weights=major_weights, k=1)[0]
        taken.extend(required[major])
        count = rng.randint(config.electives_min, config.electives_max)
        taken.extend(rng.sample(electives, count))
        for course in taken:
            records.append(_record(rng, student_id, course))
            if rng.random() < _RETAKE_PROBABILITY:
                records.append(_record(rng, student_id, course))
    return records


def _record(rng: Random, student_id: str, course: _Course) -> EnrollmentRecord:
    grade = round(rng.uniform(1.0, 4.0), 1) if rng.random() < _GRADE_PROBABILITY else None
    return EnrollmentRecord(
        student_id=student_id,
        course_title=course.title,
        department=course.department,
        course_number=course.number,
        section=str(rng.randint(1, 3)),
        semester=rng.choice(SEMESTERS),
        final_grade=grade,
    )


def config_category_map(config: SynthConfig) -> CategoryMap:
    """Department-to-category map implied by the generator config."""
    mapping = {dept.name: dept.category for dept in config.departments}
    return CategoryMap(mapping=mapping, categories=tuple(sorted(set(mapping.values()))))


def parse_synth_config(text: str) -> SynthConfig:
    """Parse the generator config format: flat key = value lines followed by
    [departments] / [cores] / [majors] sections of comma-separated rows.

    Lines starting with # and blank lines are ignored.
    """
    flat: dict[str, str] = {}
    departments: list[DepartmentSpec] = []
    cores: list[CoreCourseSpec] = []
    majors: list[tuple[str, float]] = []
    section: str | None = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("departments", "cores", "majors"):
                raise ConfigError(f"line {line_no}: unknown section [{section}]")
            continue
        if section is None:
            if "=" not in line:
                raise ConfigError(f"line {line_no}: expected key = value, got {line!r}")
            key, _, value = line.partition("=")
            flat[key.strip()] = value.strip()
            continue
        cells = [cell.strip() for cell in line.split(",")]
        try:
            if section == "departments":
                if len(cells) != 4:
                    raise ValueError("expected name, category, courses, required")
                departments.append(DepartmentSpec(cells[0], cells[1], int(cells[2]), int(cells[3])))
            elif section == "cores":
                if len(cells) != 3:
                    raise ValueError("expected department, uniqueness, probability")
                cores.append(CoreCourseSpec(cells[0], cells[1], float(cells[2])))
            else:
                if len(cells) != 2:
                    raise ValueError("expected department, weight")
                majors.append((cells[0], float(cells[1])))
        except ValueError as exc:
            raise ConfigError(f"line {line_no}: {exc}") from None

    try:
        config = SynthConfig(
            seed=int(flat.pop("seed", "0")),
            students=int(flat.pop("students")),
            departments=tuple(departments),
            core_courses=tuple(cores),
            majors=tuple(majors),
            electives_min=int(flat.pop("electives_min", "0")),
            electives_max=int(flat.pop("electives_max", "0")),
        )
    except KeyError as missing:
        raise ConfigError(f"missing required config key: {missing.args[0]}") from None
    except ValueError as exc:
        raise ConfigError(f"invalid config value: {exc}") from None
    if flat:
        raise ConfigError("unknown config keys: " + ", ".join(sorted(flat)))
    validate_config(config)
    return config


def load_synth_config(path: str | Path) -> SynthConfig:
    return parse_synth_config(Path(path).read_text(encoding="utf-8"))
