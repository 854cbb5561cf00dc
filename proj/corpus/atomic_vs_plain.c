int x;

void main()
{
#pragma omp parallel
    {
        int seen;
#pragma omp atomic
        x = x + 1;
        seen = x;
    }
}
