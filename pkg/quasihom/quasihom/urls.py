# quasihom/quasihom/urls.py

"""
Root URL configuration: the JSON endpoints of `singularities` live under `/api/`.
"""

from django.urls import include, path

urlpatterns = [
    path('api/', include('singularities.urls')),
]
