"""
Admin configuration for the verifier app.
"""
from django.contrib import admin
from django.utils.html import format_html
from .models import VerificationRun

STATUS_COLORS = {
    0: '#28a745',
    1: '#6c757d',
    2: '#dc3545',
}


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = (
        'id',
        'command',
        'display_status',
        'passed_count',
        'failed_count',
        'created_at',
    )
    list_filter = ('command', 'exit_code', 'created_at')
    search_fields = ('command',)
    readonly_fields = (
        'command',
        'config',
        'passed_count',
        'failed_count',
        'exit_code',
        'report',
        'created_at',
    )
    ordering = ('-created_at',)

    fieldsets = (
        ('Overview', {
            'fields': (
                ('command', 'exit_code', 'created_at'),
                ('passed_count', 'failed_count'),
            ),
        }),
        ('Configuration', {
            'fields': ('config',),
            'classes': ('collapse',),
        }),
        ('Report', {
            'fields': ('report',),
            'classes': ('collapse',),
            'description': 'One row per check, in output order.',
        }),
    )

    def display_status(self, obj):
        return format_html(
            '<b style="color: {};">{}</b>',
            STATUS_COLORS.get(obj.exit_code, '#6c757d'),
            obj.status_label,
        )
    display_status.short_description = 'Status'
    display_status.admin_order_field = 'exit_code'
