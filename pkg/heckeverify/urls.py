"""
Root URL configuration for heckeverify: the admin, where recorded runs are browsed.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
