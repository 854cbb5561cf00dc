int x;

void main()
{
#pragma omp parallel
    {
        int ok;
        ok = 1;
    }
#pragma omp parallel
    {
        x = x + 1;
    }
}
