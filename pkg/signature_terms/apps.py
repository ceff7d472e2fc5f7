from django.apps import AppConfig


class SignatureTermsConfig(AppConfig):
    name = "signature_terms"
