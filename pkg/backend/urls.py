"""
URL configuration for the zgamma project.

Only the admin is served; it lists the run ledger.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
