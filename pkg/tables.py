import pandas as pd

IH_COLUMNS = ["degree", "dim"]
PH_COLUMNS = ["stratum", "component", "chi_c", "multiplicity", "index", "singular_index"]


def ih_dataframe(ih):
    """IH ranks as a degree/dim table"""
    return pd.DataFrame({"degree": range(len(ih.dims)), "dim": list(ih.dims)}, columns=IH_COLUMNS)


def ph_dataframe(report):
    """One row per declared zero"""
    rows = [
        {
            "stratum": row.stratum,
            "component": row.component,
            "chi_c": row.chi_c,
            "multiplicity": row.multiplicity,
            "index": row.index,
            "singular_index": row.singular_index,
            "label": row.label,
        }
        for row in report.rows
    ]
    return pd.DataFrame(rows, columns=PH_COLUMNS + ["label"])


def stratumwise_dataframe(result):
    """Per-component terms of the stratumwise Iχ"""
    rows = [
        {
            "stratum": term.stratum,
            "component": term.component,
            "dim": term.dim,
            "chi_c": term.chi_c,
            "link_ih": " ".join(str(d) for d in term.link_ih),
            "inner": term.inner,
            "contribution": term.contribution,
        }
        for term in result.terms
    ]
    return pd.DataFrame(rows, columns=["stratum", "component", "dim", "chi_c", "link_ih", "inner", "contribution"])


def stratum_report_dataframe(report):
    rows = [
        {
            "stratum": s.id,
            "name": s.name,
            "dim": s.dim,
            "simplices": " ".join(str(c) for c in s.simplex_counts),
            "chi_c": s.chi_c,
            "components": s.n_components,
        }
        for s in report.strata
    ]
    return pd.DataFrame(rows, columns=["stratum", "name", "dim", "simplices", "chi_c", "components"])


def witnesses_dataframe(decision):
    rows = [
        {"stratum": w.stratum, "component": w.component, "name": w.name, "dim": w.dim, "chi_c": w.chi_c}
        for w in decision.witnesses
    ]
    return pd.DataFrame(rows, columns=["stratum", "component", "name", "dim", "chi_c"])


def gallery_dataframe(entries):
    rows = [
        {
            "name": e.name,
            "dimension": e.expected.get("dimension"),
            "subdivisions": e.subdivisions,
            "chain_level": e.chain_level,
            "description": e.description,
        }
        for e in entries
    ]
    return pd.DataFrame(rows, columns=["name", "dimension", "subdivisions", "chain_level", "description"])


def to_csv(df, columns=None):
    """CSV text without the index, optionally restricted to fixed columns"""
    return df.to_csv(index=False, columns=columns, lineterminator="\n")


def to_text(df):
    if df.empty:
        return "(none)"
    return df.to_string(index=False)
