# -*- coding: utf-8 -*-
#
# This file is part of MODCURVE.BIELL.
#
# MODCURVE.BIELL is free software: you can redistribute it and/or modify it
# under the terms of the GNU General Public License as published by the Free
# Software Foundation, version 2.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE. See the GNU General Public License for more
# details.
#
# You should have received a copy of the GNU General Public License along with
# this program; if not, write to the Free Software Foundation, Inc., 51
# Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
#
# Copyright 2026 by its authors.
# Some rights reserved, see README and LICENSE.

"""Writers for the classification report. The output only depends on the
records, never on the order they were computed in
"""

import collections
import csv
import io
import json

CSV_COLUMNS = ("N", "W", "genus", "status", "witness", "field", "exclusion",
               "quadratic_points", "reason")


def summary(records):
    counts = collections.Counter(r.status for r in records)
    return collections.OrderedDict(
        (status, counts[status]) for status in sorted(counts))


def genus_dict(genus_rows):
    data = collections.OrderedDict()
    for N in sorted(genus_rows):
        data[str(N)] = collections.OrderedDict(
            (label, genus) for label, _, genus in genus_rows[N])
    return data


def md_table(header, rows):
    lines = ["| {} |".format(" | ".join(header)),
             "|{}|".format("|".join("---" for _ in header))]
    for row in rows:
        lines.append("| {} |".format(" | ".join(
            "" if v is None else str(v) for v in row)))
    return lines


def render_markdown(records, genus_rows, trace=False):
    lines = []
    if genus_rows:
        lines.append("# Genus tables")
        shapes = collections.OrderedDict()
        for N in sorted(genus_rows):
            header = tuple(label for label, _, _ in genus_rows[N])
            shapes.setdefault(header, []).append(N)
        for header, levels in shapes.items():
            lines.append("")
            rows = [[N] + [genus for _, _, genus in genus_rows[N]]
                    for N in levels]
            lines.extend(md_table(("N",) + header, rows))
    if records:
        if lines:
            lines.append("")
        lines.append("# Bielliptic quotients")
        lines.append("")
        rows = []
        for r in records:
            if not r.is_bielliptic():
                continue
            source = "adjudicated" if r.adjudication else "computed"
            rows.append([r.N, r.W.label(), r.genus, r.witness, r.field,
                         source])
        lines.extend(md_table(
            ("N", "W", "genus", "witness", "field", "source"), rows))

        lines.append("")
        lines.append("# Infinitely many quadratic points")
        lines.append("")
        rows = [[r.N, r.W.label(), r.quadratic.reason] for r in records
                if r.quadratic and r.quadratic.kind == "infinite"]
        lines.extend(md_table(("N", "W", "reason"), rows))

        lines.append("")
        lines.append("# Summary")
        lines.append("")
        lines.extend(md_table(("status", "pairs"),
                              summary(records).items()))

        if trace:
            lines.append("")
            lines.append("# Rule traces")
            for r in records:
                lines.append("")
                lines.append("## {} {} ({})".format(
                    r.N, r.W.label(), r.status))
                lines.append("")
                lines.extend("- {}".format(v) for v in r.trace)
    return "\n".join(lines) + "\n"


def render_csv(records, genus_rows, trace=False):
    """One row per pair. Without records, one row per level of the genus
    tables
    """
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if records:
        columns = CSV_COLUMNS + (("trace",) if trace else ())
        writer.writerow(columns)
        for r in records:
            data = r.to_dict(trace=trace)
            row = [data[c] for c in CSV_COLUMNS]
            if trace:
                row.append(" / ".join(str(v) for v in r.trace))
            writer.writerow(["" if v is None else v for v in row])
    elif genus_rows:
        for N in sorted(genus_rows):
            header = [label for label, _, _ in genus_rows[N]]
            writer.writerow(["N"] + header)
            writer.writerow([N] + [g for _, _, g in genus_rows[N]])
    return out.getvalue()


def render_json(records, genus_rows, trace=False):
    data = collections.OrderedDict()
    if genus_rows:
        data["genera"] = genus_dict(genus_rows)
    if records:
        data["pairs"] = [r.to_dict(trace=trace) for r in records]
        data["summary"] = summary(records)
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


RENDERERS = {
    "markdown": render_markdown,
    "csv": render_csv,
    "json": render_json,
}


def render(fmt, records, genus_rows=None, trace=False):
    try:
        renderer = RENDERERS[fmt]
    except KeyError:
        raise ValueError("Unknown report format {!r}".format(fmt))
    records = sorted(records, key=lambda r: r.sort_key())
    return renderer(records, genus_rows or {}, trace)
