from django.core.validators import MinValueValidator
from django.db import models, transaction


class EvaluationRun(models.Model):
    """One `eval --record` invocation: the dataset, fold plan and seed used."""
    dataset_path = models.CharField(max_length=500)
    context_model = models.CharField(max_length=10, help_text="Feature window, e.g. 'I' or 'II'")
    instances = models.PositiveIntegerField()
    folds = models.PositiveSmallIntegerField(validators=[MinValueValidator(2)])
    seed = models.IntegerField(default=1)
    compared_with = models.CharField(
        max_length=500, blank=True,
        help_text="Second dataset of a --compare run, if any",
    )
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['-created_at', '-id']

    def __str__(self):
        return f"{self.dataset_path} (Model {self.context_model}, {self.folds}-fold, seed {self.seed})"

    @classmethod
    def record(cls, dataset_path, reports, compared_with=''):
        """Store evaluation reports given as (context model name, EvalReport) pairs."""
        first = reports[0][1]
        with transaction.atomic():
            run = cls.objects.create(
                dataset_path=str(dataset_path),
                context_model=reports[0][0],
                instances=first.instances,
                folds=first.folds,
                seed=first.seed,
                compared_with=str(compared_with or ''),
            )
            AlgorithmScore.objects.bulk_create([
                AlgorithmScore.from_result(run, context_model, result)
                for context_model, report in reports
                for result in report.results
            ])
        return run

    @property
    def best_score(self):
        return self.scores.order_by('-correct', 'algorithm').first()


class AlgorithmScore(models.Model):
    run = models.ForeignKey(EvaluationRun, on_delete=models.CASCADE, related_name='scores')
    algorithm = models.CharField(max_length=20)
    context_model = models.CharField(max_length=10)
    correct = models.PositiveIntegerField()
    incorrect = models.PositiveIntegerField()
    kappa = models.FloatField()
    mean_absolute_error = models.FloatField()
    root_mean_squared_error = models.FloatField()
    relative_absolute_error = models.FloatField(null=True, blank=True)
    root_relative_squared_error = models.FloatField(null=True, blank=True)
    confusion_matrix = models.JSONField(help_text="Rows are actual classes, columns predicted")

    class Meta:
        ordering = ['run', 'context_model', 'algorithm']
        indexes = [
            models.Index(fields=['algorithm', 'context_model'], name='score_algo_model_idx'),
        ]

    @classmethod
    def from_result(cls, run, context_model, result):
        return cls(
            run=run,
            algorithm=result.algorithm,
            context_model=context_model,
            correct=result.correct,
            incorrect=result.incorrect,
            kappa=result.kappa,
            mean_absolute_error=result.mae,
            root_mean_squared_error=result.rmse,
            relative_absolute_error=result.rae,
            root_relative_squared_error=result.rrse,
            confusion_matrix=result.matrix.counts.tolist(),
        )

    def __str__(self):
        return f"{self.algorithm} on Model {self.context_model}: {self.correct_pct:.4f}%"

    @property
    def instances(self):
        return self.correct + self.incorrect

    @property
    def correct_pct(self):
        return 100.0 * self.correct / self.instances if self.instances else 0.0
