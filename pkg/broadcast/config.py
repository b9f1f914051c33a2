from schema import TDict, TFloat, TInt, TObject, TString


class BroadcastConfig(TObject):
    type_ = TString("broadcast")
    receivers = TDict(TFloat(0.0, minimum=0.0, maximum=1.0))
    ns = TFloat(1.0, minimum=0.0)
    out = TString()
    precision = TInt(12, minimum=1, maximum=17)
