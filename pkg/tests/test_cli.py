import json
import subprocess
import sys

import pytest

from hyperquad.cli import main
from hyperquad.parsing import parse_poly
from hyperquad.projective import gen_triple


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def json_lines(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_tables_json(capsys):
    code, out, err = run(capsys, 'tables', '--p', '11', '--json')
    assert code == 0 and not err
    rows = json_lines(out)
    assert len(rows) == 10
    assert rows[0] == {'p': 11, 'a': 1, 'b': 7, 'c': 9, 'H': {'u': 1, 'v': 7, 'w': 7, 'z': 2},
                       'degenerate': False, 'P_shape': '2^2*1', 'H_shape': '2^5*1^2'}
    assert set(rows[0]) == {'p', 'a', 'b', 'c', 'H', 'degenerate', 'P_shape', 'H_shape'}
    _, again, _ = run(capsys, 'tables', '--p', '11', '--json')
    assert again == out


def test_tables_text_layout(capsys):
    code, out, _ = run(capsys, 'tables', '--p', '11')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'p = 11'
    assert len(lines) == 2 + 5
    assert lines[2].startswith('(1,7,9)') and '(1,7,7,2)' in lines[2] and '(6,6,2)' in lines[2]


def test_tables_p23_rows_have_null_h(capsys):
    code, out, _ = run(capsys, 'tables', '--p', '23', '--json')
    rows = json_lines(out)
    assert code == 0 and len(rows) == 22
    assert all(r['H'] is None and r['H_shape'] is None for r in rows)


def test_find_h_found(capsys):
    code, out, _ = run(capsys, 'find-h', '--p', '17', '--order', '1', '--poly', 'x^5+x^2+15*x+13',
                       '--json')
    assert code == 0
    obj = json_lines(out)[0]
    assert obj['candidates'][0] == {'u': 1, 'v': 13, 'w': 13, 'z': 3, 'degenerate': False,
                                    'trivial': False}


def test_find_h_empty(capsys):
    P = str(gen_triple(23, 1).poly())
    code, out, err = run(capsys, 'find-h', '--p', '23', '--order', '1', '--poly', P)
    assert code == 1
    assert 'no projective polynomial' in err


@pytest.mark.parametrize('argv', [
    ['find-h', '--p', '11', '--poly', 'x^2+*x'],
    ['find-h', '--p', '12', '--poly', 'x^5+1'],
    ['find-h', '--p', '11', '--poly', 'x+1'],
    ['triple', '--p', '7', '--a', '1'],
    ['order-power', '--p', '11', '--h', '1,1,1,1', '--m', '2'],
    ['order-power', '--p', '11', '--h', '1,2,3', '--m', '2'],
    ['factor-shape', '--p', '11', '--poly', 'x^2+2*x+1'],
    ['riccati', '--mode', 'sym', '--poly', 'x^2+2*x+1'],
    ['quintic-check', '--mode', 'ratfunc', '--p', '13'],
    ['scan', '--primes', '11,x'],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert not out and 'error' in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(['find-h', '--p', '11'])
    assert info.value.code == 2


def test_triple(capsys):
    code, out, _ = run(capsys, 'triple', '--p', '11', '--a', '2', '--json')
    assert code == 0
    assert json_lines(out)[0] == {'p': 11, 'a': 2, 'b': 10, 'c': 2, 'P': 'x^5+2*x^2+10*x+2'}


def test_riccati_sym(capsys):
    code, out, _ = run(capsys, 'riccati', '--mode', 'sym', '--poly', 'x^2+a*x+b', '--json')
    obj = json_lines(out)[0]
    assert code == 0
    R = parse_poly(f'({obj["R"]})', 'sym').coeff(0)
    a, b = (parse_poly(v, 'sym').coeff(0) for v in 'ab')
    assert R == 4 * b - a * a
    assert parse_poly(obj['Qr'], 'sym') == parse_poly('(a*ap-2*bp)*x+(2*b*ap-a*bp)', 'sym')


def test_riccati_quartic_substitution(capsys):
    code, out, _ = run(capsys, 'riccati', '--mode', 'sym', '--poly', 'x^4+a*x^2+b*x+c',
                       '--subst', 'c=-a^2/12', '--json')
    obj = json_lines(out)[0]
    assert code == 0 and obj['Q']['b3'] == '0'
    b1 = parse_poly(f'({obj["Q"]["b1"]})', 'sym')
    assert b1 == parse_poly('(32/27*ap*a^5+8/3*bp*b*a^3+4*ap*b^2*a^2+9*bp*b^3)', 'sym')


def test_riccati_ratfunc(capsys):
    code, out, _ = run(capsys, 'riccati', '--mode', 'ratfunc', '--p', '11', '--poly', 'x^2+(T)*x+1')
    assert code == 0
    assert out.splitlines() == ['R = 10*T^2+4', 'disc = T^2+7', 'b1 = T', 'b0 = 2']


def test_quartic_verify_identity(capsys):
    code, out, _ = run(capsys, 'quartic', '--p', '7', '--a', '1', '--b', '2', '--verify-identity',
                       '--json')
    obj = json_lines(out)[0]
    assert code == 0 and obj['identity_holds'] and obj['P_matches']
    assert obj['candidates'] == [{'u': 1, 'v': 6, 'w': 1, 'z': 3, 'degenerate': False}]


def test_quartic_degenerate(capsys):
    code, out, _ = run(capsys, 'quartic', '--p', '7', '--a', '1', '--b', '1', '--json')
    obj = json_lines(out)[0]
    assert code == 0 and all(c['degenerate'] for c in obj['candidates'])


@pytest.mark.parametrize('mode', ['sym', 'ratfunc'])
def test_quintic_check(capsys, mode):
    code, out, _ = run(capsys, 'quintic-check', '--mode', mode, '--json')
    obj = json_lines(out)[0]
    assert code == 0 and obj['vanishing']
    assert obj['b4'] == obj['b3'] == obj['b2'] == obj['b0'] == '0'


def test_quintic_custom_triple(capsys):
    code, out, _ = run(capsys, 'quintic', '--mode', 'ratfunc', '--p', '11',
                       '--triple', '8*T^3;2*T^4;2*T^5')
    assert code == 0 and 'True' in out


def test_factor_shape(capsys):
    code, out, _ = run(capsys, 'factor-shape', '--p', '11', '--poly', 'x^12+7*x^11+7*x+2')
    assert code == 0 and out.strip() == '2^5*1^2'
    code, out, _ = run(capsys, 'factor-shape', '--p', '5', '--poly', 'x^2+1', '--factors',
                       '--json')
    assert json_lines(out)[0] == {'shape': '1^2', 'factor_count': 2, 'degree': 2,
                                  'factors': ['x+2', 'x+3']}


def test_order_power(capsys):
    code, out, _ = run(capsys, 'order-power', '--p', '11', '--h', '1,7,7,2', '--t', '1', '--m', '2',
                       '--json')
    assert code == 0
    assert json_lines(out)[0] == {'p': 11, 't': 2, 'u': 0, 'v': 8, 'w': 3, 'z': 0}


def test_scan(capsys):
    code, out, _ = run(capsys, 'scan', '--primes', '11,23', '--json')
    objs = json_lines(out)
    assert code == 0
    assert [(o['p'], o['hits']) for o in objs] == [(11, 10), (23, 0)]
    code, out, _ = run(capsys, 'scan', '--primes', '23-30')
    assert code == 1
    assert out.splitlines() == ['p = 23: 0/22 hits at order 1', 'p = 29: 0/28 hits at order 1']


def test_json_env_default(capsys, monkeypatch):
    monkeypatch.setenv('HYPERQUAD_JSON', '1')
    code, out, _ = run(capsys, 'triple', '--p', '17', '--a', '1')
    assert json_lines(out)[0]['b'] == 15


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, 'find-h', '--p', '11', '--poly', '7+x^2+9+x^5', '--json')
    text = json_lines(out)[0]['P']
    P = parse_poly(text, 'fp', p=11)
    assert str(P) == text == 'x^5+x^2+5'


def test_module_entry_point():
    proc = subprocess.run([sys.executable, '-m', 'hyperquad', 'triple', '--p', '11', '--a', '1'],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == '(1,7,9)  P = x^5+x^2+7*x+9'


def test_selftest(capsys):
    code, out, _ = run(capsys, 'selftest')
    lines = out.splitlines()
    assert code == 0 and len(lines) == 9
    assert all(line.startswith('PASS') for line in lines)
