# Generated by Django 5.2.4 on 2026-10-19 09:12

import django.core.validators
import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='EvaluationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('dataset_path', models.CharField(max_length=500)),
                ('context_model', models.CharField(help_text="Feature window, e.g. 'I' or 'II'", max_length=10)),
                ('instances', models.PositiveIntegerField()),
                ('folds', models.PositiveSmallIntegerField(validators=[django.core.validators.MinValueValidator(2)])),
                ('seed', models.IntegerField(default=1)),
                ('compared_with', models.CharField(blank=True, help_text='Second dataset of a --compare run, if any', max_length=500)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'ordering': ['-created_at', '-id'],
            },
        ),
        migrations.CreateModel(
            name='AlgorithmScore',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('algorithm', models.CharField(max_length=20)),
                ('context_model', models.CharField(max_length=10)),
                ('correct', models.PositiveIntegerField()),
                ('incorrect', models.PositiveIntegerField()),
                ('kappa', models.FloatField()),
                ('mean_absolute_error', models.FloatField()),
                ('root_mean_squared_error', models.FloatField()),
                ('relative_absolute_error', models.FloatField(blank=True, null=True)),
                ('root_relative_squared_error', models.FloatField(blank=True, null=True)),
                ('confusion_matrix', models.JSONField(help_text='Rows are actual classes, columns predicted')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='scores', to='sandhi.evaluationrun')),
            ],
            options={
                'ordering': ['run', 'context_model', 'algorithm'],
                'indexes': [models.Index(fields=['algorithm', 'context_model'], name='score_algo_model_idx')],
            },
        ),
    ]
