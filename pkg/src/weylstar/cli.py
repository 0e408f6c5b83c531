"""Command-line driver.

Exit status is 0 on success, 1 on a domain error (the stderr line names the
error class), and 2 on malformed expressions or usage errors.
"""

import json
import sys
from fractions import Fraction

import click

from . import classifier, geometry, harness, jacobian, morphisms
from ._sparse import format_scalar
from .errors import ResidualError, WeylStarError
from .parser import ExprSyntaxError, parse_element
from .weyl import commutator

# expressions such as "-x" must reach us as arguments, not unknown options
CTX = {"ignore_unknown_options": True, "help_option_names": ["--help"]}


def _weyl(text):
    return parse_element(text, "weyl")


def _poly(text):
    return parse_element(text, "poly")


def _scalar(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{text!r} is not a rational number") from None


def _scalar_list(text):
    if text is None or not text.strip():
        return ()
    return tuple(_scalar(t) for t in text.split(","))


def _print_images(fx, fy):
    click.echo(f"fx = {fx}")
    click.echo(f"fy = {fy}")


def _print_fields(obj):
    for key, value in obj.items():
        text = ",".join(value) if isinstance(value, list) else value
        click.echo(f"{key} = {text}".rstrip())


def _dump(obj):
    click.echo(json.dumps(obj, separators=(",", ":")))


@click.group(context_settings=CTX)
def cli():
    """Exact arithmetic and alpha-endomorphism classification in A_1(Q)."""


@cli.command(context_settings=CTX)
@click.argument("expr")
@click.option("--poly", is_flag=True, help="Read X, Y as commutative variables.")
def normalize(expr, poly):
    """Print EXPR in normal form."""
    click.echo(_poly(expr) if poly else _weyl(expr))


@cli.command("commutator", context_settings=CTX)
@click.argument("p")
@click.argument("q")
def commutator_cmd(p, q):
    """Print [P, Q] = PQ - QP."""
    click.echo(commutator(_weyl(p), _weyl(q)))


def _unary(name, fn, doc):
    @cli.command(name, context_settings=CTX, help=doc)
    @click.argument("expr")
    def cmd(expr):
        click.echo(fn(_weyl(expr)))

    return cmd


_unary("alpha", morphisms.apply_alpha, "Apply the exchange involution x <-> y.")
_unary("beta", morphisms.apply_beta, "Apply the involution x -> x, y -> -y.")
_unary("phi", morphisms.apply_phi, "Apply x -> (x + y)/2, y -> y - x.")
_unary("phi-inv", morphisms.apply_phi_inv, "Apply x -> x - y/2, y -> x + y/2.")


def _geometry_options(f):
    f = click.option("--poly", is_flag=True, help="Read X, Y as commutative variables.")(f)
    f = click.option("--lower", is_flag=True, help="Use minimal instead of maximal weight.")(f)
    f = click.option("--sigma", type=int, required=True)(f)
    f = click.option("--rho", type=int, required=True)(f)
    return click.argument("expr")(f)


@cli.command(context_settings=CTX)
@_geometry_options
def degree(expr, rho, sigma, lower, poly):
    """Print the (RHO, SIGMA)-weighted degree of EXPR."""
    e = _poly(expr) if poly else _weyl(expr)
    fn = geometry.lower_degree if lower else geometry.degree
    click.echo(fn((rho, sigma), e))


@cli.command(context_settings=CTX)
@_geometry_options
def leading(expr, rho, sigma, lower, poly):
    """Print the (RHO, SIGMA)-leading term of EXPR."""
    e = _poly(expr) if poly else _weyl(expr)
    fn = geometry.lower_leading_term if lower else geometry.leading_term
    click.echo(fn((rho, sigma), e))


@cli.command(context_settings=CTX)
@click.argument("expr")
@click.option("--poly", is_flag=True)
def support(expr, poly):
    """Print the exponent pairs of EXPR in canonical order."""
    e = _poly(expr) if poly else _weyl(expr)
    pts = sorted(geometry.support(e), key=lambda p: (-(p.i + p.j), -p.i))
    click.echo(" ".join(f"({p.i},{p.j})" for p in pts))


def _image_options(f):
    f = click.option("--fy", required=True, help="Image of the second generator.")(f)
    return click.option("--fx", required=True, help="Image of the first generator.")(f)


@cli.command("apply", context_settings=CTX)
@_image_options
@click.argument("expr")
def apply_cmd(fx, fy, expr):
    """Apply the homomorphism x -> FX, y -> FY to EXPR."""
    click.echo(morphisms.apply_endo((_weyl(fx), _weyl(fy)), _weyl(expr)))


def _check_line(d, fx, fy, alpha):
    if d.is_endomorphism:
        endo = "endomorphism: yes"
    else:
        endo = f"endomorphism: no (residual [fy,fx] - 1 = {d.endomorphism_residual})"
    if d.is_alpha_equivariant:
        eq = "alpha-equivariant: yes"
    else:
        eq = f"alpha-equivariant: no (residual {alpha(fx)} - {fy} = {d.alpha_residual_x})"
    return f"{endo}; {eq}"


@cli.command(context_settings=CTX)
@_image_options
def check(fx, fy):
    """Report whether (FX, FY) is an endomorphism commuting with alpha."""
    gx, gy = _weyl(fx), _weyl(fy)
    click.echo(_check_line(morphisms.diagnose((gx, gy)), gx, gy, morphisms.apply_alpha))


@cli.command(context_settings=CTX)
@_image_options
@click.option("--json", "as_json", is_flag=True)
def classify(fx, fy, as_json):
    """Extract the canonical parameters of an alpha-endomorphism."""
    form = classifier.classify((_weyl(fx), _weyl(fy)))
    if as_json:
        _dump(form.to_json())
    else:
        _print_fields(form.to_json())


@cli.command(context_settings=CTX)
@_image_options
def invert(fx, fy):
    """Print the images of the inverse automorphism."""
    _print_images(*classifier.invert((_weyl(fx), _weyl(fy))))


def _family_options(f):
    f = click.option("--c", "c", default="", help="Comma-separated c0,c1,...")(f)
    f = click.option("--b", "b", required=True)(f)
    return click.option("--a", "a", required=True)(f)


@cli.command(context_settings=CTX)
@_family_options
def family(a, b, c):
    """Print the images of the family member with parameters A, B, C."""
    p = morphisms.FamilyParams(_scalar(a), _scalar(b), _scalar_list(c))
    _print_images(*morphisms.build_family(p))


@cli.group(context_settings=CTX)
def jac():
    """The commutative analogue on Q[X, Y] with the Jacobian bracket."""


@jac.command("bracket", context_settings=CTX)
@click.argument("p")
@click.argument("q")
def jac_bracket_cmd(p, q):
    click.echo(jacobian.jac_bracket(_poly(p), _poly(q)))


@jac.command("check", context_settings=CTX)
@_image_options
def jac_check(fx, fy):
    gx, gy = _poly(fx), _poly(fy)
    jac_value = jacobian.jac_bracket(gx, gy)
    jline = "jacobian-one: yes" if jac_value == 1 else f"jacobian-one: no (Jac = {jac_value})"
    if jacobian.is_alpha_morphism(gx, gy):
        aline = "alpha-morphism: yes"
    else:
        res = jacobian.apply_poly_alpha(gx) - gy
        aline = f"alpha-morphism: no (residual {jacobian.apply_poly_alpha(gx)} - {gy} = {res})"
    click.echo(f"{jline}; {aline}")


@jac.command("classify", context_settings=CTX)
@_image_options
@click.option("--json", "as_json", is_flag=True)
def jac_classify(fx, fy, as_json):
    params = jacobian.jc2_classify(_poly(fx), _poly(fy))
    if as_json:
        _dump(params.to_json())
    else:
        _print_fields(params.to_json())


@jac.command("invert", context_settings=CTX)
@_image_options
def jac_invert(fx, fy):
    _print_images(*jacobian.jc2_invert(_poly(fx), _poly(fy)))


@jac.command("family", context_settings=CTX)
@_family_options
def jac_family(a, b, c):
    p = jacobian.JacFamilyParams(_scalar(a), _scalar(b), _scalar_list(c))
    _print_images(*jacobian.build_jac_family(p))


@cli.command(context_settings=CTX)
@click.option("--trials", type=int, default=20, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def verify(trials, seed, as_json):
    """Run the randomized verification campaign and the degree-1 probe."""
    report = harness.run_campaign(trials, seed)
    if as_json:
        _dump(report.to_json())
    else:
        click.echo(report.summary())
    if not report.ok:
        raise click.exceptions.Exit(1)


def _report_error(exc):
    line = f"error: {type(exc).__name__}: {exc}"
    if isinstance(exc, ResidualError) and exc.residual is not None:
        line += f" [residual: {exc.residual}]"
    click.echo(line, err=True)


def main(argv=None):
    """Run the CLI on ``argv`` and return the exit status."""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        cli.main(args=args, prog_name="weylstar", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    except click.ClickException as exc:
        exc.show()
        return 2
    except ExprSyntaxError as exc:
        _report_error(exc)
        return 2
    except WeylStarError as exc:
        _report_error(exc)
        return 1
    return 0


def run():
    sys.exit(main())
