"""
Tests for the synthetic stem lexicon.
"""
import io

import pytest

from sandhi.exceptions import LexiconExhausted
from sandhi.lexicon import generate_stems, write_stems
from sandhi.phonology import render, tokenize
from sandhi.rules import synthesis_suffixes, synthesize_dataset


class TestGenerateStems:
    """Tests for generate_stems."""

    def test_count_and_distinctness(self, stems):
        """Test that the requested number of distinct stems comes back."""
        assert len(stems) == 120
        assert len({str(s) for s in stems}) == 120

    def test_same_seed_same_lexicon(self):
        """Test determinism for a fixed seed."""
        assert [str(s) for s in generate_stems(50, seed=3)] == [str(s) for s in generate_stems(50, seed=3)]

    def test_different_seed_differs(self):
        """Test that the seed matters."""
        assert [str(s) for s in generate_stems(50, seed=3)] != [str(s) for s in generate_stems(50, seed=4)]

    def test_render_tokenize_round_trip(self, stems, junctions):
        """Test that every stem and every generated surface survives re-tokenizing."""
        for word in [*stems, *(j.surface for j in junctions)]:
            assert tokenize(render(word)) == word

    def test_exhaustion_raises(self):
        """Test that an impossible request fails instead of looping."""
        with pytest.raises(LexiconExhausted) as excinfo:
            generate_stems(10 ** 6, seed=1, max_attempts_per_stem=1)
        assert excinfo.value.requested == 10 ** 6

    def test_every_stem_is_classifiable(self, stems):
        """Test that no generated stem is skipped by the oracle."""
        junctions = synthesize_dataset(stems, synthesis_suffixes())
        assert len(junctions) == len(stems) * 9


class TestWriteStems:
    """Tests for write_stems."""

    def test_header_and_lines(self):
        """Test the one-stem-per-line layout."""
        sink = io.StringIO()
        write_stems([tokenize('maram'), tokenize('pU')], sink, header='two stems')
        assert sink.getvalue() == '# two stems\nmaram\npU\n'
