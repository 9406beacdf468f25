# quick version
def make_account(balance):
    acct = {'balance': balance}
    acct['balance'] += 10
    return acct
print(make_account(5))
