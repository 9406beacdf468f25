import json


def load(path):
    try:
        with open(path) as handle:
            return json.load(handle)
    except FileNotFoundError:
        return None
    except (ValueError, KeyError) as exc:
        print("bad file", exc)
        raise
    else:
        pass
    finally:
        print("done")
