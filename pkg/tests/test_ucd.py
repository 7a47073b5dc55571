import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scriptid import ucd
from scriptid.ucd import ScriptAlias, UcdScriptEntry


LATIN = [ScriptAlias("Latin", "Latn"), ScriptAlias("Common", "Zyyy"), ScriptAlias("Greek", "Grek")]

scalar_values = st.integers(0, ucd.MAX_CODEPOINT).filter(lambda cp: not 0xD800 <= cp <= 0xDFFF)


def brute_force_map(scripts_text, aliases_text):
    """Codepoint -> code straight from the file text, no table involved."""
    codes = {}
    for line in aliases_text.splitlines():
        f = [x.strip() for x in line.split("#")[0].split(";")]
        if f[0] == "sc" and len(f) >= 3:
            codes[f[2]] = f[1]
    out = {}
    for line in scripts_text.splitlines():
        data = line.split("#")[0].strip()
        if not data:
            continue
        span, name = (x.strip() for x in data.split(";"))
        lo, _, hi = span.partition("..")
        for cp in range(int(lo, 16), int(hi or lo, 16) + 1):
            out[cp] = codes[name]
    return out


class TestParseScripts:
    def test_range_line(self):
        assert ucd.parse_scripts_file("0041..005A    ; Latin # L&  [26] LATIN CAPITAL LETTER A..") == [
            UcdScriptEntry(0x41, 0x5A, "Latin")
        ]

    def test_single_codepoint_line(self):
        assert ucd.parse_scripts_file("00AA          ; Latin # Lo       FEMININE ORDINAL INDICATOR") == [
            UcdScriptEntry(0xAA, 0xAA, "Latin")
        ]

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\n0041..005A ; Latin\n   \n# trailer\n"
        assert len(ucd.parse_scripts_file(text)) == 1

    @pytest.mark.parametrize(
        "line",
        ["ZZZZ..0041 ; Latin", "0041..005A", "0041..005A ; ", "005A..0041 ; Latin", "110000 ; Latin", "41 ; Latin"],
    )
    def test_malformed(self, line):
        with pytest.raises(ucd.UcdParseError) as e:
            ucd.parse_scripts_file("# ok\n" + line, "Scripts.txt")
        assert e.value.line == 2
        assert "Scripts.txt:2:" in str(e.value)

    def test_bundled_file(self, scripts_text):
        entries = ucd.parse_scripts_file(scripts_text)
        assert len(entries) == 2191
        assert entries[0] == UcdScriptEntry(0, 0x1F, "Common")


class TestParseAliases:
    def test_script_lines(self):
        text = "sc ; Latn ; Latin\nsc ; Zyyy ; Common\ngc ; Lu ; Uppercase_Letter\n"
        assert ucd.parse_aliases_file(text) == [ScriptAlias("Latin", "Latn"), ScriptAlias("Common", "Zyyy")]

    def test_extra_alias_field(self):
        assert ucd.parse_aliases_file("sc ; Copt ; Coptic ; Qaac") == [ScriptAlias("Coptic", "Copt")]

    def test_conflicting_codes(self):
        with pytest.raises(ucd.UcdParseError):
            ucd.parse_aliases_file("sc ; Latn ; Latin\nsc ; Latf ; Latin")

    def test_conflicting_names(self):
        with pytest.raises(ucd.UcdParseError):
            ucd.parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Roman")

    def test_repeat_is_fine(self):
        assert len(ucd.parse_aliases_file("sc ; Latn ; Latin\nsc ; Latn ; Latin")) == 1

    def test_bad_code(self):
        with pytest.raises(ucd.UcdParseError):
            ucd.parse_aliases_file("sc ; LATN ; Latin")

    def test_bundled_file(self, aliases_text):
        aliases = ucd.parse_aliases_file(aliases_text)
        assert len(aliases) == 165
        assert len({a.code for a in aliases}) == len({a.long_name for a in aliases}) == 165
        assert all(ucd.is_script_code(a.code) for a in aliases)


class TestBuildTable:
    def test_uncovered_defaults_to_unknown(self):
        t = ucd.build_table([UcdScriptEntry(0x41, 0x5A, "Latin")], LATIN)
        assert t.lookup(0x41) == "Latn"
        assert t.lookup(0x5A) == "Latn"
        assert t.lookup(0x5B) == "Zzzz"
        assert t.lookup(0x40) == "Zzzz"

    def test_replacement_char_override(self):
        t = ucd.build_table([UcdScriptEntry(0xFFF9, 0xFFFD, "Common")], LATIN)
        assert t.lookup(0xFFFC) == "Zyyy"
        assert t.lookup(0xFFFD) == "Zzzz"

    def test_overlap_rejected(self):
        with pytest.raises(ucd.TableBuildError):
            ucd.build_table([UcdScriptEntry(0x41, 0x5A, "Latin"), UcdScriptEntry(0x50, 0x60, "Greek")], LATIN)

    def test_unknown_value_named(self):
        with pytest.raises(ucd.TableBuildError, match="Klingon"):
            ucd.build_table([UcdScriptEntry(0xF8D0, 0xF8FF, "Klingon")], LATIN)

    def test_adjacent_merge(self):
        entries = [UcdScriptEntry(0x61, 0x7A, "Latin"), UcdScriptEntry(0x41, 0x5A, "Latin"), UcdScriptEntry(0x5B, 0x60, "Common")]
        merged = ucd.build_table(entries, LATIN)
        assert merged.entries == ((0x41, 0x5A, "Latn"), (0x5B, 0x60, "Zyyy"), (0x61, 0x7A, "Latn"))
        t = ucd.build_table([UcdScriptEntry(0x41, 0x50, "Latin"), UcdScriptEntry(0x51, 0x5A, "Latin")], LATIN)
        assert t.entries == ((0x41, 0x5A, "Latn"),)

    def test_full_input_161_scripts(self, table):
        assert len(table.scripts()) == 161
        assert ucd.SPECIAL_CODES <= table.codes()

    def test_table_invariants(self, table):
        table.check()
        alias_codes = {a.code for a in ucd.parse_aliases_file(ucd.read_bundled(ucd.ALIASES_FILE))}
        assert {e[2] for e in table.entries} <= alias_codes | ucd.SPECIAL_CODES

    def test_embedded_matches_bundled_build(self, table):
        built = ucd.build_bundled_table()
        assert built.entries == table.entries
        assert dict(built.overrides) == dict(table.overrides)
        assert ucd.render_table_module(built) == ucd.render_table_module(table)


class TestLookup:
    @pytest.mark.parametrize(
        "cp, code",
        [(0x5B, "Zyyy"), (0x200D, "Zinh"), (0x621, "Arab"), (0x41, "Latn"), (0xFFFD, "Zzzz"), (0x378, "Zzzz"), (0x10FFFF, "Zzzz")],
    )
    def test_examples(self, table, cp, code):
        assert ucd.lookup(table, cp) == code

    @given(scalar_values)
    def test_total(self, cp):
        code = ucd.default_table().lookup(cp)
        assert code in ucd.default_table().codes()

    def test_every_codepoint_matches_brute_force(self, table, scripts_text, aliases_text):
        oracle = brute_force_map(scripts_text, aliases_text)
        for cp in range(ucd.MAX_CODEPOINT + 1):
            if 0xD800 <= cp <= 0xDFFF:
                continue
            expected = "Zzzz" if cp == 0xFFFD else oracle.get(cp, "Zzzz")
            assert table.lookup(cp) == expected, hex(cp)

    def test_merge_safety(self):
        merged = ucd.build_bundled_table(merge=True)
        unmerged = ucd.build_bundled_table(merge=False)
        assert len(unmerged.entries) > len(merged.entries)
        rng = random.Random(7)
        probes = {s for e in unmerged.entries for s in (e[0], e[1], e[1] + 1)}
        probes |= {rng.randrange(ucd.MAX_CODEPOINT + 1) for _ in range(20000)}
        for cp in probes:
            assert merged.lookup(cp) == unmerged.lookup(cp)


class TestSerialization:
    def test_round_trip(self, table):
        text = ucd.dumps_table(table)
        back = ucd.loads_table(text)
        assert back.entries == table.entries
        assert dict(back.overrides) == {0xFFFD: "Zzzz"}
        assert back.unicode_version == "15.0.0"
        assert ucd.dumps_table(back) == text

    def test_missing_header(self):
        with pytest.raises(ucd.UcdParseError, match="header"):
            ucd.loads_table("0041\t005A\tLatn\n")

    def test_bad_line(self):
        with pytest.raises(ucd.UcdParseError) as e:
            ucd.loads_table("# scriptid-table 1\n0041 005A\n", "t.tsv")
        assert e.value.line == 2

    def test_overlap_detected_on_load(self):
        with pytest.raises(ucd.TableBuildError):
            ucd.loads_table("# scriptid-table 1\n0041 005A Latn\n0050 0060 Zyyy\n")

    def test_checksum_stable(self, table):
        assert table.checksum() == ucd.build_bundled_table().checksum()
