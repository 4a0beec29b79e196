"""Case-audit CSV ingestion and the published-totals tallies."""

import pytest

from verdict_bn.cases import CSV_COLUMNS, parse_case_csv, serialize_case_csv, summarize
from verdict_bn.errors import BadHeader, BadToken
from verdict_bn.negligence import builtin_audit_extract

HEADER = ",".join(CSV_COLUMNS)


def row(**overrides):
    values = {
        "case_id": "Test [2020] XYZ 1", "outcome": "lost", "duty_established": "yes",
        "duty_breached": "no", "soc_breached": "no", "butfor": "failed",
        "ameliorated": "yes", "jurisdiction": "NSW", "authority_level": "L",
        "risk_exists": "-", "knowledge": "-", "notes": "",
    }
    values.update(overrides)
    return ",".join(values[c] for c in CSV_COLUMNS)


def test_embedded_extract_has_fifteen_records():
    assert len(builtin_audit_extract()) == 15


def test_header_only_gives_empty_dataset():
    assert len(parse_case_csv(HEADER + "\n")) == 0


@pytest.mark.parametrize("token", ["-", "", "na", "NA", "not cons", "Not Cons",
                                   "not considered", "NOT CONSIDERED"])
def test_unknown_tokens_map_to_unknown(token):
    ds = parse_case_csv(HEADER + "\n" + row(butfor=token) + "\n")
    assert ds.records[0].butfor == "unknown"


def test_butfor_tokens_mapped():
    ds = parse_case_csv(HEADER + "\n" + row(butfor="Succeeded") + "\n" + row(butfor="Failed") + "\n")
    assert [r.butfor for r in ds] == ["succeeded", "failed"]


def test_whitespace_trimmed():
    ds = parse_case_csv(HEADER + "\n" + row(outcome=" won ", jurisdiction=" VIC ") + "\n")
    assert ds.records[0].outcome == "won"
    assert ds.records[0].jurisdiction == "VIC"


def test_missing_column_rejected():
    headerless = HEADER.replace("butfor,", "")
    with pytest.raises(BadHeader, match="butfor"):
        parse_case_csv(headerless + "\n")


def test_bad_token_names_row_and_column():
    with pytest.raises(BadToken, match=r"row 2.*outcome.*banana"):
        parse_case_csv(HEADER + "\n" + row(outcome="banana") + "\n")


def test_empty_case_id_rejected():
    with pytest.raises(BadToken, match="case_id"):
        parse_case_csv(HEADER + "\n" + row(case_id="") + "\n")


def test_round_trip_is_identity():
    ds = builtin_audit_extract()
    assert parse_case_csv(serialize_case_csv(ds)).records == ds.records


def test_duplicate_case_names_allowed():
    # One row per case-defendant pairing: Scarf and Barclay each appear twice.
    names = [r.case_id for r in builtin_audit_extract()]
    assert names.count("Scarf [1998] QSC 233") == 2
    assert names.count("Barclay [2002] HCA 54") == 2


class TestSummarize:
    def test_reproduces_published_totals(self):
        totals = summarize(builtin_audit_extract())
        assert totals.records == 15
        assert totals.outcome == {"won": 3, "lost": 12}
        assert totals.duty_established == {"yes": 11, "no": 4}
        assert totals.duty_breached == {"yes": 3, "no": 12}
        assert totals.soc_breached == {"yes": 1, "no": 14}
        assert totals.butfor == {"succeeded": 3, "failed": 9, "not_considered": 3}
        assert totals.ameliorated == {"yes": 9, "no": 6}
        assert totals.jurisdiction == {"NSW": 10, "VIC": 2, "QLD": 2, "NT": 1}
        assert totals.authority_level == {"L": 9, "S": 6, "F": 0}

    def test_unknown_breach_folds_into_no(self):
        ds = parse_case_csv(HEADER + "\n" + row(duty_breached="-") + "\n")
        assert summarize(ds).duty_breached == {"yes": 0, "no": 1}

    def test_every_group_sums_to_record_count(self):
        totals = summarize(builtin_audit_extract())
        for group in (totals.outcome, totals.duty_established, totals.duty_breached,
                      totals.soc_breached, totals.butfor, totals.ameliorated,
                      totals.jurisdiction, totals.authority_level):
            assert sum(group.values()) == totals.records

    def test_empty_dataset_all_zero(self):
        totals = summarize(parse_case_csv(HEADER + "\n"))
        assert totals.records == 0
        assert sum(totals.outcome.values()) == 0
        assert totals.jurisdiction == {}


class TestEmbeddedRecords:
    def test_vairy(self):
        vairy = [r for r in builtin_audit_extract() if r.case_id.startswith("Vairy")][0]
        assert vairy.outcome == "won"
        assert vairy.duty_breached == "yes"
        assert vairy.butfor == "succeeded"
        assert vairy.ameliorated == "no"
        assert vairy.jurisdiction == "NSW"
        assert vairy.authority_level == "L"

    def test_heyman(self):
        heyman = [r for r in builtin_audit_extract() if r.case_id.startswith("Heyman")][0]
        assert heyman.outcome == "lost"
        assert heyman.duty_established == "no"
        assert heyman.butfor == "failed"
        assert heyman.ameliorated == "no"
        assert heyman.authority_level == "L"
