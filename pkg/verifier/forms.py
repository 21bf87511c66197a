"""
Forms for the verifier app.

RunConfigForm validates the flags of a verification command before any
algebra is run.
"""
from django import forms
from django.conf import settings

from .algebra.invariants import PLAIN, TWISTED
from .algebra.io import parse_q, resolve_path
from .algebra.partitions import parse_partition
from .algebra.quadratic import KINDS
from .exceptions import OperatorFileError, ScalarParseError

OPERATOR_FIELDS = ('op', 'S', 'R', 'T')
FORMAT_CHOICES = [('table', 'table'), ('json', 'json')]


class RunConfigForm(forms.Form):
    """
    A run configuration.

    Validation rules:
        - operator files: must exist, directly or in the bundled directory
        - q: a nonzero rational or "sym"
        - max_degree, degree, probe, k: at least 1
        - sigma: a partition written as comma-separated parts
        - the operators named in ``required_operators`` must be given
    """
    op = forms.CharField(required=False)
    S = forms.CharField(required=False)
    R = forms.CharField(required=False)
    T = forms.CharField(required=False)
    paths = forms.JSONField(required=False)

    q = forms.CharField(required=False, help_text='A rational Hecke eigenvalue, or "sym".')
    max_degree = forms.IntegerField(required=False, min_value=1)
    format = forms.ChoiceField(choices=FORMAT_CHOICES, initial='json')
    seed = forms.IntegerField(required=False, min_value=0)

    family = forms.ChoiceField(choices=[(k, k) for k in KINDS], required=False)
    kind = forms.ChoiceField(choices=[(k, k) for k in ('E', 'F', 'M', 'N')], required=False)
    sigma = forms.CharField(required=False)
    degree = forms.IntegerField(required=False, min_value=1)
    version = forms.ChoiceField(choices=[(PLAIN, PLAIN), (TWISTED, TWISTED)], required=False)
    probe = forms.IntegerField(required=False, min_value=1)
    dS = forms.IntegerField(required=False, min_value=1)
    dR = forms.IntegerField(required=False, min_value=1)
    k = forms.IntegerField(required=False, min_value=1)

    def __init__(self, *args, required_operators=(), **kwargs):
        super().__init__(*args, **kwargs)
        self.required_operators = tuple(required_operators)

    def _clean_operator(self, name):
        value = (self.cleaned_data.get(name) or '').strip()
        if not value:
            return ''
        try:
            return str(resolve_path(value, settings.VERIFIER['OPERATOR_DIR']))
        except OperatorFileError as exc:
            raise forms.ValidationError(str(exc))

    def clean_op(self):
        return self._clean_operator('op')

    def clean_S(self):
        return self._clean_operator('S')

    def clean_R(self):
        return self._clean_operator('R')

    def clean_T(self):
        return self._clean_operator('T')

    def clean_paths(self):
        """Resolve every positional operator path."""
        paths = self.cleaned_data.get('paths') or []
        resolved = []
        for path in paths:
            try:
                resolved.append(str(resolve_path(path, settings.VERIFIER['OPERATOR_DIR'])))
            except OperatorFileError as exc:
                raise forms.ValidationError(str(exc))
        return resolved

    def clean_q(self):
        text = (self.cleaned_data.get('q') or '').strip()
        if not text:
            return None
        try:
            parse_q(text)
        except ScalarParseError as exc:
            raise forms.ValidationError(str(exc))
        return text

    def clean_sigma(self):
        text = (self.cleaned_data.get('sigma') or '').strip()
        if not text:
            return None
        try:
            return parse_partition(text)
        except (ScalarParseError, ValueError) as exc:
            raise forms.ValidationError(f'Invalid partition "{text}": {exc}')

    def clean(self):
        cleaned = super().clean()
        for name in self.required_operators:
            if name in OPERATOR_FIELDS and not cleaned.get(name) and name not in self.errors:
                self.add_error(name, f'The --{name} operator file is required.')
        if cleaned.get('max_degree') is None:
            cleaned['max_degree'] = settings.VERIFIER['DEFAULT_MAX_DEGREE']
        if cleaned.get('seed') is None:
            cleaned['seed'] = settings.VERIFIER['DEFAULT_SEED']
        return cleaned

    def as_config(self):
        """The cleaned data as a JSON-safe dict, empty values dropped."""
        config = {}
        for key, value in self.cleaned_data.items():
            if value in (None, '', []):
                continue
            config[key] = str(value) if key == 'sigma' else value
        return config
