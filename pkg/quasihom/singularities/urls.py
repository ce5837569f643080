# quasihom/singularities/urls.py

"""
URL configuration of the singularities app, mounted under `api/`.
"""

from django.urls import path
from . import views

# reverse('singularities:analyze')
app_name = 'singularities'

urlpatterns = [
    path("analyze/", views.analyze, name="analyze"),
    path("blocks/", views.blocks, name="blocks"),
]
