class Letter:
    """
    Generator letters. Single qubit words use H and P, two qubit words use the wire suffixed names.
    """
    H = 'H'
    P = 'P'

    H1 = 'h1'
    H2 = 'h2'
    P1 = 'p1'
    P2 = 'p2'
    CZ = 'cz'

    @staticmethod
    def single_qubit():
        return [Letter.H, Letter.P]

    @staticmethod
    def local():
        return [Letter.H1, Letter.H2, Letter.P1, Letter.P2]

    @staticmethod
    def getall():
        return Letter.local() + [Letter.CZ]

    @staticmethod
    def wire_of(letter):
        return int(letter[-1])

    @staticmethod
    def on_wire(letter, wire):
        return '{}{}'.format(letter.lower(), wire)

    @staticmethod
    def base(letter):
        return letter[0].upper()


class Entangler:
    CZ = 'CZ'
    CNOT12 = 'CNOT12'
    CNOT21 = 'CNOT21'

    @staticmethod
    def getall():
        return [Entangler.CZ, Entangler.CNOT12, Entangler.CNOT21]
