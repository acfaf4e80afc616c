import re
from textwrap import dedent
from typing import Tuple

_SECTION = re.compile(r'^\[(WORKFLOW|PARAMETERS|OUTPUT|RAISES|ATTRIBUTES)\]\s*$', re.IGNORECASE)


def parse_docstring(docstring: str) -> Tuple[str, str]:
    """Split a docstring into click help text and an epilog.

    The summary is the first paragraph folded onto one line. The epilog is
    everything after it, minus the [PARAMETERS], [OUTPUT], [RAISES] and
    [ATTRIBUTES] sections, which click already renders from the options.

    [PARAMETERS]
    docstring : str
        Usually a function's or a class's __doc__.

    [OUTPUT]
    Tuple[str, str]
        (help_summary, epilog); ("", "") for an empty docstring.

    [EXAMPLE]
    >>> parse_docstring("Check a category.\\n\\n[EXAMPLE]\\nskewcat check category ch3.json")
    ('Check a category.', '[EXAMPLE]\\nskewcat check category ch3.json')
    """
    if not docstring:
        return "", ""

    text = dedent(docstring).strip()
    parts = re.split(r'\n\s*\n', text, 1)
    help_summary = " ".join(parts[0].split())
    if len(parts) == 1:
        return help_summary, ""

    kept, skipping = [], False
    for line in parts[1].splitlines():
        match = _SECTION.match(line.strip())
        if match:
            skipping = match.group(1).upper() != "WORKFLOW"
        elif line.strip().startswith("[") and line.strip().endswith("]"):
            skipping = False
        if not skipping:
            kept.append(line)

    return help_summary, "\n".join(kept).strip()
