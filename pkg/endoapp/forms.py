# forms.py
from django import forms

from .algebra import make_params
from .exceptions import ParameterError


class RingParamsForm(forms.Form):
    """Validates --p and --m and builds the RingParams they describe."""
    p = forms.IntegerField(help_text="Prime characteristic of Z_p")
    m = forms.IntegerField(help_text="Exponent of Z_{p^m}, at least 2")

    def clean(self):
        cleaned_data = super().clean()
        p = cleaned_data.get('p')
        m = cleaned_data.get('m')

        if p is not None and m is not None:
            try:
                cleaned_data['params'] = make_params(p, m)
            except ParameterError as exc:
                raise forms.ValidationError(str(exc))

        return cleaned_data


class BudgetForm(forms.Form):
    """Validates the --budget cap on pairwise enumeration"""
    budget = forms.IntegerField(required=False, min_value=1)


def form_errors(form):
    """Flatten a bound form's errors into one line."""
    messages = []
    for field, errors in form.errors.items():
        for error in errors:
            messages.append(error if field == '__all__' else f"{field}: {error}")
    return "; ".join(messages)
