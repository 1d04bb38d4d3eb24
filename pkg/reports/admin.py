"""
Run ledger admin interface.
"""

from django.contrib import admin

from .models import RunRecord


@admin.register(RunRecord)
class RunRecordAdmin(admin.ModelAdmin):
    """Admin interface for RunRecord model."""

    list_display = ['command', 'status', 'exit_code', 'output_dir', 'created_at']
    list_filter = ['command', 'status', 'created_at']
    search_fields = ['command', 'message', 'output_dir']
    readonly_fields = ['created_at']

    fieldsets = (
        ('Run', {
            'fields': ('command', 'status', 'exit_code', 'message', 'output_dir')
        }),
        ('Payload', {
            'fields': ('parameters', 'summary')
        }),
        ('Timestamps', {
            'fields': ('created_at',)
        }),
    )
