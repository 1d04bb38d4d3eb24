from django.test import TestCase

from reports.models import RunRecord


class RunRecordTestCase(TestCase):
    def test_status_follows_exit_code(self):
        """Test that exit codes 0, 2 and 3 map to their statuses."""
        self.assertEqual(RunRecord.record('decompose', 0, {}).status, RunRecord.Status.SUCCESS)
        self.assertEqual(RunRecord.record('simulate', 2, {}).status, RunRecord.Status.CONFIG_ERROR)
        self.assertEqual(RunRecord.record('verify', 3, {}).status, RunRecord.Status.NUMERICAL_FAILURE)
        self.assertEqual(RunRecord.record('verify', 1, {}).status, RunRecord.Status.ERROR)

    def test_payload_round_trip(self):
        """Test that parameters and summary are stored as JSON."""
        record = RunRecord.record('heterodyne', 0, {'omega1': 11.0}, {'gamma_c': 0.91}, output_dir='runs/a')
        stored = RunRecord.objects.get(pk=record.pk)
        self.assertEqual(stored.parameters, {'omega1': 11.0})
        self.assertEqual(stored.summary['gamma_c'], 0.91)
        self.assertTrue(stored.succeeded)
        self.assertIn('heterodyne', str(stored))

    def test_newest_first(self):
        """Test that records are ordered newest first."""
        first = RunRecord.record('decompose', 0, {})
        second = RunRecord.record('decompose', 0, {})
        self.assertEqual(list(RunRecord.objects.all()), [second, first])
