"""Plain-text reports: assessments, range filters, version verdicts.

Rendering is deterministic; the Turkish templates mirror the wording of the
original evaluation screens line by line, English is the default.
"""

from dataclasses import dataclass

from .rules import Assessment, Level, RangeFilter
from .tables import format_value
from .versions import VersionVerdict

LOCALES = ("en", "tr")

#: (key, value) line; value None renders the key bare (sub-heading line).
Line = tuple[str, "str | None"]


@dataclass(frozen=True)
class Section:
    heading: str
    lines: tuple[Line, ...] = ()


@dataclass(frozen=True)
class Report:
    title: str
    sections: tuple[Section, ...] = ()
    locale: str = "en"


def render_text(report: Report) -> str:
    """Title, then sections in order; headings uppercased; aligned ' : '."""
    out = [report.title]
    for section in report.sections:
        out.append("")
        out.append(_upper(section.heading, report.locale))
        keyed = [line for line in section.lines if line[1] is not None]
        width = max((len(k) for k, _ in keyed), default=0)
        for key, value in section.lines:
            if value is None:
                out.append(key)
            else:
                out.append(f"{key:<{width}} : {value}")
    return "\n".join(out) + "\n"


def _upper(text: str, locale: str) -> str:
    if locale == "tr":
        # Turkish dotted/dotless i must not round-trip through ASCII casing.
        text = text.replace("i", "İ").replace("ı", "I")
    return text.upper()


# --- wording tables ----------------------------------------------------------

STRINGS = {
    "en": {
        "title": "EVALUATION RESULTS",
        "metric_section": "FINDINGS EXAMINED FOR THE {metric} METRIC,",
        "min_key": "SMALLEST value version/s",
        "max_key": "LARGEST value version/s",
        "quality_heading": "In Terms of Code Quality;",
        "worst_quality": "Most Complex and Lowest",
        "best_quality": "Least Complex and Highest",
        "effort_heading": "Time and Labor Spent on Development, "
                          "Maintenance-Repair and Test Activities;",
        "effort_most": "Most",
        "effort_least": "Least",
        "tie_join": " and ",
        "class_heading": "CLASS ASSESSMENT",
        "project_heading": "PROJECT ASSESSMENT",
        "class_key": "Class",
        "project_key": "Project",
        "fired_rules": "Fired rules",
        "selection_section": "{metric} SELECTION: {condition}",
        "in_range": "In range",
        "out_of_range": "Out of range",
        "none": "none",
        "version_prefix": "VERSION",
    },
    "tr": {
        "title": "DEĞERLENDİRME SONUÇLARI",
        "metric_section": "ELDE EDİLEN BULGULAR {metric} METRİĞİ "
                          "AÇISINDAN İNCELENDİĞİNDE,",
        "min_key": "EN KÜÇÜK değere sahip sürüm/ler",
        "max_key": "EN BÜYÜK değere sahip sürüm/ler",
        "quality_heading": "Kod Kalitesi Bakımından;",
        "worst_quality": "En Karışık ve En Düşük",
        "best_quality": "En Az Karışık ve En Yüksek",
        "effort_heading": "Geliştirilmesi, Bakım-Onarımı ve Test Faaliyetleri "
                          "Bakımından Harcanak Zaman ve İş Gücü;",
        "effort_most": "En Çok",
        "effort_least": "En Az",
        "tie_join": " ve ",
        "class_heading": "SINIF DEĞERLENDİRMESİ",
        "project_heading": "PROJE DEĞERLENDİRMESİ",
        "class_key": "Sınıf",
        "project_key": "Proje",
        "fired_rules": "Kullanılan kurallar",
        "selection_section": "{metric} SEÇİMİ: {condition}",
        "in_range": "Aralıkta",
        "out_of_range": "Aralık dışında",
        "none": "yok",
        "version_prefix": "SÜRÜM",
    },
}

LEVEL_TEXT = {
    "en": {
        Level.VERY_LOW: "Very Low",
        Level.LOW: "Low",
        Level.NORMAL: "Normal",
        Level.HIGH: "High",
        Level.VERY_HIGH: "Very High",
    },
    "tr": {
        Level.VERY_LOW: "Çok Düşük",
        Level.LOW: "Düşük",
        Level.NORMAL: "Normal",
        Level.HIGH: "Yüksek",
        Level.VERY_HIGH: "Çok Yüksek",
    },
}

# Amount-flavored attributes read as quantities, and the desired-range label
# for inheritance depth, exactly as the original screens word them.
LEVEL_TEXT_BY_ATTRIBUTE = {
    "en": {
        ("maintenanceEffort", Level.VERY_LOW): "Very Little",
        ("maintenanceEffort", Level.LOW): "Little",
        ("maintenanceEffort", Level.HIGH): "Much",
        ("maintenanceEffort", Level.VERY_HIGH): "Very Much",
        ("inheritanceDepth", Level.NORMAL): "In Desired Range",
    },
    "tr": {
        ("maintenanceEffort", Level.VERY_LOW): "Çok Az",
        ("maintenanceEffort", Level.LOW): "Az",
        ("maintenanceEffort", Level.HIGH): "Çok",
        ("maintenanceEffort", Level.VERY_HIGH): "Çok Fazla",
        ("inheritanceDepth", Level.NORMAL): "İstenen Aralıkta",
    },
}

ATTRIBUTE_TEXT = {
    "en": {
        "complexity": "Complexity",
        "understandability": "Understandability",
        "testability": "Testability",
        "reusability": "Reusability",
        "robustness": "Robustness",
        "faultLikelihood": "Fault Likelihood",
        "maintenanceEffort": "Maintenance, Repair and Test Effort",
        "quality": "Quality Level",
        "coupling": "Coupling Level",
        "modularDesign": "Modular Design",
        "inheritanceDepth": "Inheritance Tree Depth",
        "methodCount": "Method Count",
    },
    "tr": {
        "complexity": "Karmaşıklık",
        "understandability": "Anlaşılabilirlik",
        "testability": "Test Edilebilirlik",
        "reusability": "Yeniden Kullanılabilirlik",
        "robustness": "Dayanıklılık",
        "faultLikelihood": "Kod Hata Olma İhtimali",
        "maintenanceEffort": "Bakım, Onarım ve Test Faaliyetleri",
        "quality": "Kalite Düzeyi",
        "coupling": "Bağımlılık Düzeyi",
        "modularDesign": "Modüler Tasarım",
        "inheritanceDepth": "Kalıtım Ağacının Derinliği",
        "methodCount": "Sınıflardaki Metot Sayısı",
    },
}


def level_text(attribute: str, level: Level, locale: str) -> str:
    override = LEVEL_TEXT_BY_ATTRIBUTE[locale].get((attribute, level))
    return override if override is not None else LEVEL_TEXT[locale][level]


def attribute_text(attribute: str, locale: str) -> str:
    return ATTRIBUTE_TEXT[locale].get(attribute, attribute)


def version_prefix(locale: str) -> str:
    return STRINGS[locale]["version_prefix"]


# --- report builders ---------------------------------------------------------

def comparison_report(verdicts: list[VersionVerdict], locale: str = "en") -> Report:
    s = STRINGS[locale]
    sections = []
    for v in verdicts:
        join = s["tie_join"].join
        lines: list[Line] = [
            (s["min_key"], f"{join(v.min_versions)} ({format_value(v.min_value)})"),
            (s["max_key"], f"{join(v.max_versions)} ({format_value(v.max_value)})"),
            (s["quality_heading"], None),
            (join(v.quality_worst), s["worst_quality"]),
            (join(v.quality_best), s["best_quality"]),
            (s["effort_heading"], None),
            (join(v.effort_most), s["effort_most"]),
            (join(v.effort_least), s["effort_least"]),
        ]
        sections.append(Section(
            heading=s["metric_section"].format(metric=v.metric),
            lines=tuple(lines)))
    return Report(title=s["title"], sections=tuple(sections), locale=locale)


def assessment_report(assessments: list[Assessment], locale: str = "en",
                      project_name: str = "") -> Report:
    s = STRINGS[locale]
    sections = []
    for a in assessments:
        if a.scope == "project":
            heading = s["project_heading"]
            name_line: Line = (s["project_key"], project_name or "project")
        else:
            heading = s["class_heading"]
            name_line = (s["class_key"], a.scope)
        lines: list[Line] = [name_line]
        lines.extend(
            (attribute_text(attribute, locale), level_text(attribute, level, locale))
            for attribute, level in a.pairs()
        )
        lines.append((s["fired_rules"], ", ".join(a.fired_rules) or s["none"]))
        sections.append(Section(heading=heading, lines=tuple(lines)))
    return Report(title=s["title"], sections=tuple(sections), locale=locale)


def filter_report(filters: list[RangeFilter], locale: str = "en") -> Report:
    s = STRINGS[locale]
    sections = []
    for f in filters:
        def names(records) -> str:
            if not records:
                return s["none"]
            return ", ".join(f"{r.class_name} ({r.value(f.metric)})"
                             for r in records)
        sections.append(Section(
            heading=s["selection_section"].format(
                metric=f.metric, condition=f.condition.describe()),
            lines=(
                (s["in_range"], names(f.in_range)),
                (s["out_of_range"], names(f.out_of_range)),
            )))
    return Report(title=s["title"], sections=tuple(sections), locale=locale)
