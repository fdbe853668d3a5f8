"""
Tests for management commands.
"""
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from sandhi.exceptions import InvariantViolation
from sandhi.generator import ingest_stems
from sandhi.management.commands._base import SandhiCommand
from sandhi.models import AlgorithmScore, EvaluationRun


def run(*args):
    """Call a command and return its stdout."""
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO())
    return out.getvalue()


def returncode(*args):
    with pytest.raises(CommandError) as exc:
        call_command(*args, stdout=StringIO(), stderr=StringIO())
    return exc.value.returncode


@pytest.fixture
def datasets(stem_file, tmp_path):
    """Model I and Model II featurizations of the exemplar stems."""
    paths = {}
    for model in ('I', 'II'):
        paths[model] = tmp_path / f'model-{model.lower()}.csv'
        run('synth', '--stems', str(stem_file), '--model', model, '--out', str(paths[model]))
    return paths


@pytest.fixture
def id3_model(datasets, tmp_path):
    path = tmp_path / 'id3.model'
    run('train', '--algo', 'id3', '--data', str(datasets['II']), '--out', str(path))
    return path


class TestSynthCommand:
    """Tests for the synth management command."""

    def test_writes_dataset(self, stem_file, tmp_path):
        """Test nine junctions per stem and the summary line."""
        out_path = tmp_path / 'model-ii.csv'
        output = run('synth', '--stems', str(stem_file), '--model', 'II', '--out', str(out_path))
        assert f'Wrote 108 instances (Model II, 12 stems) to {out_path}' in output
        lines = out_path.read_text(encoding='utf-8').splitlines()
        assert lines[0] == 's1,s2,s3,s4,s5,x1,x2,x3,x4,x5,class'
        assert len(lines) == 109

    def test_all_suffix_forms(self, stem_file, tmp_path):
        """Test that every suffix form of every category is attached."""
        out_path = tmp_path / 'all.csv'
        output = run(
            'synth', '--stems', str(stem_file), '--model', 'I',
            '--suffixes', 'all', '--out', str(out_path),
        )
        assert 'Wrote 144 instances (Model I, 12 stems)' in output

    def test_missing_stem_file(self, tmp_path):
        """Test that an unreadable input is a data error."""
        assert returncode(
            'synth', '--stems', str(tmp_path / 'absent.txt'), '--model', 'I',
            '--out', str(tmp_path / 'out.csv'),
        ) == 2

    def test_bad_model_choice(self, stem_file, tmp_path):
        """Test that an invalid flag value is a usage error."""
        assert returncode(
            'synth', '--stems', str(stem_file), '--model', 'III', '--out', str(tmp_path / 'x.csv'),
        ) == 1

    def test_missing_required_flag(self, stem_file):
        """Test that omitting --out is a usage error."""
        assert returncode('synth', '--stems', str(stem_file), '--model', 'I') == 1


class TestTrainAndInspectCommands:
    """Tests for the train and inspect management commands."""

    def test_train_reports_tree_size(self, datasets, tmp_path):
        """Test the summary line of a tree learner."""
        path = tmp_path / 'c45.model'
        output = run('train', '--algo', 'c45', '--data', str(datasets['I']), '--out', str(path))
        assert output.startswith('Trained C4.5 on 108 instances (Model I, ')
        assert 'nodes); saved to' in output
        assert path.exists()

    def test_train_forest_parameters(self, datasets, tmp_path):
        """Test that forest flags reach the saved model."""
        path = tmp_path / 'rf.model'
        run(
            'train', '--algo', 'rforest', '--data', str(datasets['II']), '--out', str(path),
            '--trees', '3', '--k', '2', '--seed', '8',
        )
        output = run('inspect', '--model', str(path))
        assert output.startswith('RandomForest model, seed 8')
        assert 'parameters: bootstrap=True, k=2, n_trees=3' in output

    def test_inspect_tree(self, id3_model):
        """Test the header and the tree listing."""
        lines = run('inspect', '--model', str(id3_model)).splitlines()
        assert lines[0].startswith('ID3 model, seed 0, schema ')
        assert lines[1] == 'attributes (10): s1 s2 s3 s4 s5 x1 x2 x3 x4 x5'
        assert any(' = ' in line and ': class ' in line for line in lines[2:])

    def test_unknown_algorithm(self, datasets, tmp_path):
        """Test an algorithm outside the registry."""
        assert returncode(
            'train', '--algo', 'svm', '--data', str(datasets['I']), '--out', str(tmp_path / 'm'),
        ) == 1

    def test_malformed_dataset(self, write_lines, tmp_path):
        """Test that a bad dataset file is a data error."""
        data = write_lines('bad.csv', 's1,x1,class', 'm,ai')
        assert returncode(
            'train', '--algo', 'nb', '--data', str(data), '--out', str(tmp_path / 'm'),
        ) == 2

    def test_header_only_dataset(self, write_lines, tmp_path):
        """Test that a dataset with no rows is a data error."""
        data = write_lines('empty.csv', 's1,x1,class')
        assert returncode(
            'train', '--algo', 'nb', '--data', str(data), '--out', str(tmp_path / 'm'),
        ) == 2

    def test_inspect_corrupt_model(self, write_lines):
        """Test that a file that is not a model is a data error."""
        assert returncode('inspect', '--model', str(write_lines('x.model', 'hello'))) == 2


class TestEvalCommand:
    """Tests for the eval management command."""

    def test_table(self, datasets):
        """Test the report header and algorithm columns."""
        output = run('eval', '--algo', 'id3,nb', '--data', str(datasets['II']), '--folds', '3')
        lines = output.splitlines()
        assert lines[0] == 'Model II: 108 instances, 3-fold cross-validation, seed 1'
        assert 'ID3' in lines[1] and 'NaiveBayes' in lines[1]

    def test_csv_is_deterministic(self, datasets):
        """Test that two runs print identical CSV."""
        args = ('eval', '--algo', 'c45,aode', '--data', str(datasets['II']), '--folds', '4', '--format', 'csv')
        first = run(*args)
        assert first == run(*args)
        assert [line.split(',')[0] for line in first.splitlines()] == ['c45', 'aode']

    def test_compare(self, datasets):
        """Test one report per featurization."""
        output = run(
            'eval', '--algo', 'nb', '--data', str(datasets['I']), '--compare', str(datasets['II']),
            '--folds', '3', '--matrix',
        )
        assert 'Model I: 108 instances' in output
        assert 'Model II: 108 instances' in output
        assert 'Model II / NaiveBayes confusion matrix (rows actual):' in output

    def test_one_fold_is_a_usage_error(self, datasets):
        """Test --folds below 2."""
        assert returncode('eval', '--algo', 'id3', '--data', str(datasets['II']), '--folds', '1') == 1

    def test_unknown_algorithm(self, datasets):
        """Test an unknown name in the algorithm list."""
        assert returncode('eval', '--algo', 'id3,j48', '--data', str(datasets['II'])) == 1

    def test_header_only_dataset(self, write_lines):
        """Test that a dataset with no rows is a data error."""
        data = write_lines('empty.csv', 's1,x1,class')
        assert returncode('eval', '--algo', 'nb', '--data', str(data)) == 2

    def test_too_few_instances(self, write_lines):
        """Test more folds than instances."""
        data = write_lines('tiny.csv', 's1,x1,class', 'm,ai,4', 'L,k,7')
        assert returncode('eval', '--algo', 'nb', '--data', str(data), '--folds', '3') == 2

    @pytest.mark.django_db
    def test_record(self, datasets):
        """Test that --record stores one score per algorithm and model."""
        err = StringIO()
        call_command(
            'eval', '--algo', 'id3,nb', '--data', str(datasets['I']), '--compare', str(datasets['II']),
            '--folds', '3', '--record', stdout=StringIO(), stderr=err,
        )
        run_ = EvaluationRun.objects.get()
        assert f'Recorded evaluation run {run_.pk}' in err.getvalue()
        assert run_.context_model == 'I'
        assert run_.compared_with == str(datasets['II'])
        assert AlgorithmScore.objects.filter(run=run_).count() == 4
        assert AlgorithmScore.objects.filter(context_model='II').count() == 2


class TestGenerationCommands:
    """Tests for the inflect, paradigm and classify management commands."""

    def test_inflect(self):
        """Test the surface form alone."""
        assert run('inflect', '--stem', 'maram', '--case', 'dative', '--plural') == 'marangkaLukku\n'

    def test_inflect_trace(self):
        """Test one trace line per junction."""
        lines = run('inflect', '--stem', 'vITu', '--case', 'accusative', '--trace').splitlines()
        assert lines == ['vITTai', '  vITu + -ai -[6]-> vITTai']

    def test_inflect_unknown_symbol(self):
        """Test a stem that does not tokenize."""
        assert returncode('inflect', '--stem', 'maqam', '--case', 'dative') == 2

    def test_inflect_with_model(self, id3_model):
        """Test the model engine on a training stem."""
        output = run('inflect', '--stem', 'maram', '--case', 'accusative', '--engine', f'model:{id3_model}')
        assert output == 'marattai\n'

    def test_inflect_missing_model(self, tmp_path):
        """Test a model engine whose file does not exist."""
        assert returncode(
            'inflect', '--stem', 'maram', '--case', 'dative', '--engine', f'model:{tmp_path}/none',
        ) == 2

    def test_paradigm(self):
        """Test the table header and a cell."""
        output = run('paradigm', '--stem', 'pU')
        assert output.startswith('Paradigm of pU\n')
        assert 'pUkkaL [9]' in output

    @pytest.mark.parametrize('suffix', ['ai', '-ai', 'accusative'])
    def test_classify(self, suffix):
        """Test suffixes given by form, by hyphenated form or by category."""
        lines = run('classify', '--stem', 'maram', f'--suffix={suffix}').splitlines()
        assert lines[0] == 'maram + -ai (accusative)'
        assert lines[1] == '  oracle: class 4 m-to-tt -> marattai'
        assert lines[2] == '  oracle: class 4 m-to-tt (agree)'

    def test_classify_with_model(self, id3_model):
        """Test agreement of a trained model with the oracle."""
        output = run('classify', '--stem', 'kAl', '--suffix', 'kaL', '--engine', f'model:{id3_model}')
        assert 'class 10 plural-l-to-r -> kARkaL' in output
        assert '(agree)' in output

    def test_classify_inapplicable_prediction(self, write_lines, tmp_path):
        """Test a model whose class cannot apply: the class is shown, the failure goes to stderr."""
        data = write_lines(
            'front.csv', 's1,s2,s3,s4,s5,x1,x2,x3,x4,x5,class',
            'X,p,a,T,i,ai,X,X,X,X,1', 'm,a,l,a,i,Al,X,X,X,X,1',
        )
        path = tmp_path / 'front.model'
        run('train', '--algo', 'nb', '--data', str(data), '--out', str(path))
        out, err = StringIO(), StringIO()
        call_command(
            'classify', '--stem', 'maram', '--suffix', 'ai', '--engine', f'model:{path}',
            stdout=out, stderr=err,
        )
        lines = out.getvalue().splitlines()
        assert lines[1] == f'  model:{path}: class 1 y-insertion -> (not applicable)'
        assert lines[2] == '  oracle: class 4 m-to-tt (DISAGREE)'
        assert 'class 1 cannot apply to maram + -ai' in err.getvalue()

    def test_classify_corrupt_model(self, write_lines):
        """Test that an unreadable model file is a data error."""
        path = write_lines('x.model', 'hello')
        assert returncode('classify', '--stem', 'maram', '--suffix', 'ai', '--engine', f'model:{path}') == 2

    def test_classify_unknown_suffix(self):
        """Test a well-formed word that is no suffix, and one that does not tokenize."""
        assert returncode('classify', '--stem', 'maram', '--suffix', 'vocative') == 1
        assert returncode('classify', '--stem', 'maram', '--suffix', 'xyz') == 2


class TestLexiconCommands:
    """Tests for dump-alphabet and make_lexicon."""

    def test_dump_alphabet(self):
        """Test one line per phoneme."""
        lines = run('dump-alphabet').splitlines()
        assert len(lines) == 30
        assert lines[0].startswith('a ')
        assert any(line.startswith('zh ') for line in lines)

    def test_make_lexicon(self, tmp_path):
        """Test that the written lexicon reads back."""
        path = tmp_path / 'stems.txt'
        output = run('make_lexicon', '--count', '25', '--seed', '3', '--out', str(path))
        assert f'Wrote 25 stems to {path}' in output
        assert len(ingest_stems(path)) == 25

    def test_make_lexicon_count(self, tmp_path):
        """Test a non-positive count."""
        assert returncode('make_lexicon', '--count', '0', '--out', str(tmp_path / 's.txt')) == 1


@pytest.mark.django_db
class TestHistoryCommand:
    """Tests for the history management command."""

    def test_empty(self):
        """Test the message when nothing was recorded."""
        assert run('history') == 'No evaluation runs recorded\n'

    def test_lists_scores(self, datasets):
        """Test a recorded run and the algorithm filter."""
        call_command(
            'eval', '--algo', 'id3,nb', '--data', str(datasets['II']), '--folds', '3', '--record',
            stdout=StringIO(), stderr=StringIO(),
        )
        output = run('history', '--algo', 'nb')
        assert output.startswith('#')
        assert 'Model II, 3-fold, seed 1' in output
        assert 'nb ' in output
        assert 'id3' not in output


class TestExitCodes:
    """Tests for the shared error mapping."""

    def test_invariant_violation(self):
        """Test that an internal invariant failure exits with 3."""
        class Broken(SandhiCommand):
            def run(self, **options):
                raise InvariantViolation('oracle and transform disagree')

        with pytest.raises(CommandError) as exc:
            Broken().handle()
        assert exc.value.returncode == 3
