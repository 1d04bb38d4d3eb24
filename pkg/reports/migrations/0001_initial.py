import django.utils.timezone
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='RunRecord',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('command', models.CharField(db_index=True, max_length=50)),
                ('status', models.CharField(choices=[('success', 'Success'), ('error', 'Error'), ('config_error', 'Configuration error'), ('numerical_failure', 'Numerical failure')], default='success', max_length=20)),
                ('exit_code', models.PositiveSmallIntegerField(default=0)),
                ('parameters', models.JSONField(default=dict, help_text='Resolved run configuration')),
                ('summary', models.JSONField(blank=True, default=dict, help_text='Headline results of the run')),
                ('message', models.TextField(blank=True)),
                ('output_dir', models.CharField(blank=True, max_length=500)),
                ('created_at', models.DateTimeField(default=django.utils.timezone.now)),
            ],
            options={
                'db_table': 'run_records',
                'ordering': ['-created_at', '-id'],
                'indexes': [models.Index(fields=['command', 'status'], name='run_records_cmd_status_idx')],
            },
        ),
    ]
